#include <doctest.h>

#include "helpers.hpp"
#include "lgtwalk/hamiltonians.hpp"
#include "lgtwalk/lattice.hpp"

using namespace lgtwalk;
using test::max_abs;
using test::unitarity_defect;

TEST_CASE("walk params validation and derived angles") {
  WalkParams p;
  p.a = 1.0;
  p.dt = 0.5;
  p.n_sites = 8;
  CHECK_NOTHROW(p.validate());
  CHECK(p.delta() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.theta() + 2.0 * p.delta() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(p.delta_tilde() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p.theta_tilde() == doctest::Approx(kPi - 0.5).epsilon(1e-15));
  p.r = 0.5;
  CHECK(p.delta_tilde_r() == doctest::Approx(0.125).epsilon(1e-15));

  WalkParams bad = p;
  bad.a = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.dt = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.n_sites = 7;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.n_sites = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("constant 2x2 matrices satisfy their algebraic identities") {
  const Matrix2 i2 = Matrix2::Identity();
  CHECK(max_abs(basis2x2::sigma1() * basis2x2::sigma1() - i2) <= 1e-15);
  CHECK(max_abs(basis2x2::sigma2() * basis2x2::sigma2() - i2) <= 1e-15);
  CHECK(max_abs(basis2x2::sigma3() * basis2x2::sigma3() - i2) <= 1e-15);
  CHECK(max_abs(basis2x2::sigma_plus() -
                0.5 * (basis2x2::sigma1() +
                       Complex(0, 1) * basis2x2::sigma2())) <= 1e-15);
  for (const Matrix2& u : {basis2x2::B(), basis2x2::G(), basis2x2::P(),
                           basis2x2::rho()})
    CHECK(max_abs(u * u.adjoint() - i2) <= 1e-15);
  // normalized square root of sigma1
  CHECK(max_abs(basis2x2::rho() * basis2x2::rho() - basis2x2::sigma1()) <=
        1e-15);
}

TEST_CASE("stagger places L_p at 2p and R_p at 2p+1") {
  WalkParams p;
  p.n_sites = 4;
  SpinorField f{Vector::Zero(8), p};
  f.amps(lr_index(1, 0)) = 1.0;  // psi^L_1
  CHECK(stagger(f).amps(2) == Complex(1.0));
  CHECK(stagger(f).amps.cwiseAbs().sum() == doctest::Approx(1.0));

  SpinorField g{Vector::Zero(8), p};
  g.amps(lr_index(1, 1)) = 1.0;  // psi^R_1
  CHECK(stagger(g).amps(3) == Complex(1.0));
}

TEST_CASE("stagger preserves the norm and unstagger inverts it exactly") {
  WalkParams p;
  p.n_sites = 6;
  SpinorField f{test::random_state(12, 7), p};
  const StaggeredField s = stagger(f);
  CHECK(std::abs(s.norm() - f.norm()) <= 1e-15);
  const SpinorField back = unstagger(s);
  CHECK((back.amps - f.amps).cwiseAbs().maxCoeff() == 0.0);

  StaggeredField z{Vector::Zero(12), p};
  CHECK(unstagger(z).amps.cwiseAbs().maxCoeff() == 0.0);
  SpinorField peak{Vector::Zero(12), p};
  peak.amps(2) = 1.0;
  CHECK(unstagger(stagger(peak)).amps(lr_index(1, 0)) == Complex(1.0));
}

TEST_CASE("basis change conjugates by the interleaving permutation") {
  WalkParams p;
  p.n_sites = 8;
  p.m = 0.7;

  LatticeOperator id{Matrix::Identity(16, 16), Basis::LRPosition, p};
  CHECK(max_abs(change_operator_basis(id, Basis::StaggeredPosition).mat -
                Matrix::Identity(16, 16)) == 0.0);

  // H (LR basis) lands on the staggered Hamiltonian.
  const LatticeOperator h = build_left_right(p);
  const LatticeOperator moved =
      change_operator_basis(h, Basis::StaggeredPosition);
  CHECK(max_abs(moved.mat - build_staggered(p).mat) <= 1e-14);
  CHECK(moved.basis == Basis::StaggeredPosition);

  // Spectrum and Hermiticity preserved.
  Eigen::SelfAdjointEigenSolver<Matrix> ea(h.mat), eb(moved.mat);
  CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(test::hermiticity_defect(moved.mat) <= 1e-12);

  CHECK_THROWS_AS(change_operator_basis(moved, Basis::StaggeredPosition),
                  std::invalid_argument);
}

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lgtwalk/digitize.hpp"
#include "lgtwalk/equivalence.hpp"
#include "lgtwalk/lattice.hpp"
#include "lgtwalk/verify.hpp"

using namespace lgtwalk;
using test::max_abs;
using test::unitarity_defect;

namespace {
const Complex kI(0.0, 1.0);

WalkParams params(int n, double delta) {
  WalkParams p;
  p.a = 1.0;
  p.dt = delta;
  p.n_sites = n;
  return p;
}

WalkParams params_dtt(int n, double dtt) {
  // pick dt so that delta_tilde = dtt
  return params(n, 2.0 * dtt);
}

double max_abs4(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("Strauch operator") {
  WalkParams p = params(8, 0.5);
  const double th = p.theta_tilde();
  SUBCASE("the two displayed factorizations agree") {
    const Matrix sinv = shift_S(8).adjoint();
    const Matrix via_k = strauch_operator(th, p).op.mat;
    const Matrix via_c = -sinv * coin_Cbreve(8, th) * sinv * coin_Cbreve(8, th);
    CHECK(max_abs(via_k - via_c) <= 1e-14);
  }
  SUBCASE("theta = pi collapses the coin to sigma1") {
    const Matrix sinv = shift_S(8).adjoint();
    const Matrix s1 = per_site(8, basis2x2::sigma1());
    const Matrix expect = (sinv * s1) * (sinv * s1);
    CHECK(max_abs(strauch_operator(kPi, p).op.mat - expect) <= 1e-14);
  }
  SUBCASE("conjugate of the mixed-angle walk") {
    const Matrix psl = per_site(8, basis2x2::P()) * shift_SL(8);
    const Matrix w = build_two_angle_walk(-th, th, p).op.mat;
    CHECK(max_abs(strauch_operator(th, p).op.mat +
                  psl * w * psl.inverse()) <= 1e-13);
  }
  SUBCASE("not equivalent to its negative at small delta") {
    WalkParams q = params(8, 0.1);
    const Matrix o = strauch_operator(q.theta_tilde(), q).op.mat;
    CHECK(spectral_compare(o, Matrix(-o), true) > 0.1);
  }
}

TEST_CASE("4x4 Fourier blocks") {
  WalkParams p = params(8, 0.5);
  SUBCASE("analytic blocks match the extracted blocks of the operators") {
    const Matrix ueo = build_even_odd(p).op.mat;
    const Matrix un = build_naive_dtqw(p).op.mat;
    for (int mm = 0; mm < 4; ++mm) {
      const double K = 2.0 * kPi * mm / 4;
      CHECK(max_abs4(extract_fourier_block(ueo, 8, K) -
                     fourier_block_even_odd(K, p).matrix) <= 1e-13);
      CHECK(max_abs4(extract_fourier_block(un, 8, K) -
                     fourier_block_naive(K, p).matrix) <= 1e-13);
    }
  }
  SUBCASE("entry formulas at a generic point") {
    const double K = 0.83;
    const double c = std::cos(p.delta_tilde()), s = std::sin(p.delta_tilde());
    const Matrix4 u = fourier_block_even_odd(K, p).matrix;
    const Matrix4 w = fourier_block_naive(K, p).matrix;
    CHECK(std::abs(u(0, 0) - (c * c + s * s * std::exp(kI * K))) <= 1e-15);
    CHECK(std::abs(u(0, 3) + s * c * (1.0 - std::exp(-kI * K))) <= 1e-15);
    CHECK(std::abs(w(1, 1) - (c * c + s * s * std::exp(-kI * K))) <= 1e-15);
    CHECK(std::abs(w(2, 2) - (c * c + s * s * std::exp(kI * K))) <= 1e-15);
  }
  SUBCASE("blocks are unitary and isospectral at random points") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dk(-kPi, kPi), dd(0.05, 1.4);
    for (int t = 0; t < 100; ++t) {
      WalkParams q = params_dtt(8, dd(rng) / 2.0);
      const double K = dk(rng);
      const Matrix4 u = fourier_block_even_odd(K, q).matrix;
      const Matrix4 w = fourier_block_naive(K, q).matrix;
      CHECK(max_abs4(u * u.adjoint() - Matrix4::Identity()) <= 1e-13);
      CHECK(spectral_compare(u, w, true) <= 1e-12);
    }
  }
}

TEST_CASE("Fourier-space mapping") {
  SUBCASE("delta_tilde = 0 gives the identity map") {
    WalkParams p = params(8, 0.0);
    CHECK(max_abs4(mapping_B_of_K(0.7, p).matrix - Matrix4::Identity()) <=
          1e-15);
  }
  SUBCASE("closed form conjugates the even-odd block into the walk block") {
    for (int i = 0; i < 16; ++i)
      for (int j = 1; j <= 16; ++j) {
        const double K = -kPi + 2.0 * kPi * i / 16;
        WalkParams p = params_dtt(8, 0.08 * j);
        const Matrix4 b = mapping_B_of_K(K, p).matrix;
        CHECK(max_abs4(b * b.adjoint() - Matrix4::Identity()) <= 1e-12);
        CHECK(max_abs4(b * fourier_block_even_odd(K, p).matrix * b.inverse() -
                       fourier_block_naive(K, p).matrix) <= 1e-12);
      }
  }
  SUBCASE("eigenvector route also conjugates (phase-gauge robust check)") {
    WalkParams p = params_dtt(8, 0.4);
    for (double K : {0.3, 1.1, 2.4}) {
      const Matrix4 b = mapping_B_of_K_eigenroute(K, p).matrix;
      CHECK(max_abs4(b * fourier_block_even_odd(K, p).matrix * b.inverse() -
                     fourier_block_naive(K, p).matrix) <= 1e-10);
    }
  }
  SUBCASE("signals a domain error when tan is undefined") {
    WalkParams p = params_dtt(8, kPi / 2);
    CHECK_THROWS_AS(mapping_B_of_K(0.1, p), std::domain_error);
  }
}

TEST_CASE("real-space mapping coefficients") {
  SUBCASE("delta_tilde = 0 keeps only the zero offset") {
    WalkParams p = params(8, 0.0);
    const auto coeffs = mapping_real_space_coefficients(p, 4, 64);
    CHECK(max_abs4(coeffs.entries.at(0) - Matrix4::Identity()) <= 1e-14);
    for (int off = -4; off <= 4; ++off)
      if (off != 0) CHECK(max_abs4(coeffs.entries.at(off)) <= 1e-14);
  }
  SUBCASE("no compact support at delta_tilde = 0.4") {
    WalkParams p = params_dtt(8, 0.4);
    const auto coeffs = mapping_real_space_coefficients(p, 8, 256);
    double prev = 0.0;
    for (int off = 0; off <= 8; ++off) {
      const double v = std::abs(coeffs.entries.at(off)(1, 1));
      const double vm = std::abs(coeffs.entries.at(-off)(1, 1));
      CHECK(v > 1e-13);
      CHECK(vm > 1e-13);
      if (off >= 2) CHECK(v < prev);  // geometric decay
      prev = v;
    }
  }
  SUBCASE("truncated series reconstructs the map on the Brillouin zone") {
    WalkParams p = params_dtt(8, 0.4);
    const auto coeffs = mapping_real_space_coefficients(p, 24, 256);
    for (double K : {0.0, 0.9, -2.2}) {
      Matrix4 rec = Matrix4::Zero();
      for (const auto& [off, b] : coeffs.entries)
        rec += b * std::exp(-kI * K * double(off));
      CHECK(max_abs4(rec - mapping_B_of_K(K, p).matrix) <= 1e-10);
    }
  }
  SUBCASE("off-diagonal entry is the (1 + e^{-iK}) convolution of the scalar tail") {
    WalkParams p = params_dtt(8, 0.4);
    const double t = std::tan(p.delta_tilde());
    const int qp = 256;
    const auto coeffs = mapping_real_space_coefficients(p, 8, qp);
    // quadrature of F(K) alone
    auto f_off = [&](int off) {
      Complex acc = 0.0;
      for (int qd = 0; qd < qp; ++qd) {
        const double K = -kPi + 2.0 * kPi * qd / qp;
        const double x =
            (t * t / 4.0) * (2.0 + 2.0 * std::cos(K));
        acc += (0.5 / std::sqrt(1.0 + x)) * std::exp(kI * K * double(off));
      }
      return acc / double(qp);
    };
    for (int off = -4; off <= 4; ++off)
      CHECK(std::abs(coeffs.entries.at(off)(1, 2) -
                     t * (f_off(off) + f_off(off - 1))) <= 1e-12);
  }
  SUBCASE("rejects insufficient quadrature resolution") {
    WalkParams p = params_dtt(8, 0.4);
    CHECK_THROWS_AS(mapping_real_space_coefficients(p, 8, 32),
                    std::invalid_argument);
  }
}

TEST_CASE("even-odd coin-basis decomposition") {
  SUBCASE("delta_tilde = 0 gives the identity") {
    WalkParams p = params(8, 0.0);
    CHECK(max_abs(even_odd_coin_decomposition(p).op.mat -
                  Matrix::Identity(16, 16)) <= 1e-14);
  }
  SUBCASE("reproduces the even-odd transport step") {
    for (double delta : {0.3, 0.5, 1.0}) {
      WalkParams p = params(8, delta);
      CHECK(max_abs(even_odd_coin_decomposition(p).op.mat -
                    build_even_odd(p).op.mat) <= 1e-12);
    }
  }
  SUBCASE("cell coin conjugation uses a true square root of sigma1") {
    CHECK(max_abs(basis2x2::rho() * basis2x2::rho() - basis2x2::sigma1()) <=
          1e-15);
  }
}

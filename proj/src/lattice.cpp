#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace basis2x2 {

static const Complex kI(0.0, 1.0);

Matrix2 sigma1() {
  Matrix2 s;
  s << 0, 1, 1, 0;
  return s;
}

Matrix2 sigma2() {
  Matrix2 s;
  s << 0, -kI, kI, 0;
  return s;
}

Matrix2 sigma3() {
  Matrix2 s;
  s << 1, 0, 0, -1;
  return s;
}

Matrix2 sigma_plus() { return 0.5 * (sigma1() + kI * sigma2()); }

Matrix2 alpha0() { return sigma3(); }
Matrix2 alpha1() { return sigma1(); }
Matrix2 gamma5() { return sigma1(); }

Matrix2 B() {
  // exp(-i sigma1 pi/4) = cos(pi/4) I - i sin(pi/4) sigma1
  double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  Matrix2 b;
  b << c, -kI * s, -kI * s, c;
  return b;
}

Matrix2 G() {
  // exp(+i sigma2 pi/4) = cos(pi/4) I + i sin(pi/4) sigma2
  double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  Matrix2 g;
  g << c, s, -s, c;
  return g;
}

Matrix2 P() {
  Matrix2 p;
  p << 0, std::exp(kI * (kPi / 4)), -std::exp(-kI * (kPi / 4)), 0;
  return p;
}

Matrix2 rho() {
  Matrix2 r;
  r << 1, -kI, -kI, 1;
  return (std::exp(kI * (kPi / 4)) / std::sqrt(2.0)) * r;
}

}  // namespace basis2x2

StaggeredField stagger(const SpinorField& field) {
  const int n = field.params.n_sites;
  if (field.amps.size() != 2 * n)
    throw std::invalid_argument("stagger: field length mismatch");
  StaggeredField out{Vector(2 * n), field.params};
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 2; ++c)
      out.amps(staggered_index(p, c)) = field.amps(lr_index(p, c));
  return out;
}

SpinorField unstagger(const StaggeredField& field) {
  const int n = field.params.n_sites;
  if (field.amps.size() != 2 * n)
    throw std::invalid_argument("unstagger: field length mismatch");
  SpinorField out{Vector(2 * n), field.params};
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 2; ++c)
      out.amps(lr_index(p, c)) = field.amps(staggered_index(p, c));
  return out;
}

LatticeOperator change_operator_basis(const LatticeOperator& op, Basis target) {
  if (op.basis == target)
    throw std::invalid_argument("change_operator_basis: basis already matches");
  const int n = op.params.n_sites;
  const int d = 2 * n;
  if (op.mat.rows() != d || op.mat.cols() != d)
    throw std::invalid_argument("change_operator_basis: dimension mismatch");
  // Permutation taking the LR index to the staggered index (or back).
  Eigen::VectorXi perm(d);
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < 2; ++c) perm(lr_index(p, c)) = staggered_index(p, c);
  Matrix pm = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) pm(perm(i), i) = 1.0;
  LatticeOperator out;
  out.params = op.params;
  out.basis = target;
  if (target == Basis::StaggeredPosition)
    out.mat = pm * op.mat * pm.adjoint();
  else
    out.mat = pm.adjoint() * op.mat * pm;
  return out;
}

Matrix per_site(int n_sites, const Matrix2& blk) {
  Matrix out = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) out.block<2, 2>(2 * p, 2 * p) = blk;
  return out;
}

}  // namespace lgtwalk

#include "lgtwalk/digitize.hpp"

#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace {
const Complex kI(0.0, 1.0);
int wrap(int p, int n) { return ((p % n) + n) % n; }
}  // namespace

Matrix WalkOperator::product() const {
  if (factors.empty()) {
    const int d = op.mat.rows();
    return Matrix::Identity(d, d);
  }
  Matrix out = factors.front().mat;
  for (size_t i = 1; i < factors.size(); ++i) out = out * factors[i].mat;
  return out;
}

Matrix shift_up(int n_sites) {
  Matrix e = Matrix::Zero(n_sites, n_sites);
  for (int p = 0; p < n_sites; ++p) e(p, wrap(p + 1, n_sites)) = 1.0;
  return e;
}

Matrix shift_SL(int n_sites) {
  const Matrix e = shift_up(n_sites);
  Matrix s = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) {
    for (int q = 0; q < n_sites; ++q)
      if (e(p, q) != 0.0) s(2 * p, 2 * q) = e(p, q);
    s(2 * p + 1, 2 * p + 1) = 1.0;
  }
  return s;
}

Matrix shift_SR(int n_sites) {
  const Matrix e = shift_up(n_sites).adjoint();
  Matrix s = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) {
    for (int q = 0; q < n_sites; ++q)
      if (e(p, q) != 0.0) s(2 * p + 1, 2 * q + 1) = e(p, q);
    s(2 * p, 2 * p) = 1.0;
  }
  return s;
}

Matrix shift_S(int n_sites) { return shift_SL(n_sites) * shift_SR(n_sites); }

Matrix coin_C(int n_sites, double theta) {
  Matrix2 c;
  c << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2),
      std::cos(theta / 2);
  return per_site(n_sites, c);
}

Matrix coin_Cbreve(int n_sites, double theta) {
  Matrix2 c;
  c << std::cos(theta / 2), -kI * std::sin(theta / 2),
      -kI * std::sin(theta / 2), std::cos(theta / 2);
  return per_site(n_sites, c);
}

Matrix coin_K(int n_sites, double theta) {
  return kI * coin_Cbreve(n_sites, theta);
}

Matrix rotation_pairs(int n_sites, double angle, int start) {
  const int d = 2 * n_sites;
  Matrix u = Matrix::Identity(d, d);
  const double c = std::cos(angle), s = std::sin(angle);
  for (int q = 0; q < n_sites; ++q) {
    const int i = wrap(start + 2 * q, d);
    const int j = wrap(start + 2 * q + 1, d);
    u(i, i) = c;
    u(i, j) = -s;
    u(j, i) = s;
    u(j, j) = c;
  }
  return u;
}

WalkOperator build_U_mass(const WalkParams& params) {
  params.validate();
  const int d = params.dim();
  const Complex mu = std::exp(-kI * params.dt * params.m);
  Matrix u = Matrix::Zero(d, d);
  for (int p = 0; p < params.n_sites; ++p) {
    u(2 * p, 2 * p) = mu;
    u(2 * p + 1, 2 * p + 1) = std::conj(mu);
  }
  WalkOperator w{{u, Basis::LRPosition, params}, {}};
  w.factors.push_back({"U_mass", u});
  return w;
}

WalkOperator build_U_on(const WalkParams& params) {
  params.validate();
  Matrix u = rotation_pairs(params.n_sites, params.delta(), 0);
  WalkOperator w{{u, Basis::LRPosition, params}, {}};
  w.factors.push_back({"U_on", u});
  return w;
}

WalkOperator build_U_int(const WalkParams& params) {
  params.validate();
  Matrix u = rotation_pairs(params.n_sites, params.delta(), 1);
  WalkOperator w{{u, Basis::LRPosition, params}, {}};
  w.factors.push_back({"U_int", u});
  return w;
}

WalkOperator build_U_transport(const WalkParams& params) {
  WalkOperator on = build_U_on(params);
  WalkOperator inter = build_U_int(params);
  WalkOperator w{{on.op.mat * inter.op.mat, Basis::LRPosition, params}, {}};
  w.factors.push_back(on.factors.front());
  w.factors.push_back(inter.factors.front());
  return w;
}

WalkOperator build_dtqw_compact(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double th = params.theta();
  WalkOperator w;
  w.factors.push_back({"C(-theta)", coin_C(n, -th)});
  w.factors.push_back({"S^R", shift_SR(n)});
  w.factors.push_back({"C(theta)", coin_C(n, th)});
  w.factors.push_back({"S^L", shift_SL(n)});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

WalkOperator build_naive_dtqw(const WalkParams& params) {
  return build_two_angle_walk(params.theta_tilde(), params.theta_tilde(),
                              params);
}

WalkOperator build_wilson_dtqw(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double th = params.theta_tilde_r();
  const Matrix g = per_site(n, basis2x2::G());
  WalkOperator w;
  w.factors.push_back({"G", g});
  w.factors.push_back({"S^R", shift_SR(n)});
  w.factors.push_back({"K(theta~_r)", coin_K(n, th)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"K(theta~_r)", coin_K(n, th)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"(S^R)^-1", shift_SR(n).adjoint()});
  w.factors.push_back({"G^-1", g.adjoint()});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

WalkOperator build_even_odd(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const int d = params.dim();
  const double dtt = params.delta_tilde();
  const Matrix2 s1 = basis2x2::sigma1();
  // Pair blocks [[c, -s sigma1], [s sigma1, c]] over spinor-site pairs.
  auto half = [&](int parity) {
    Matrix u = Matrix::Identity(d, d);
    const double c = std::cos(dtt), s = std::sin(dtt);
    for (int p = parity; p < n; p += 2) {
      const int q = wrap(p + 1, n);
      u.block<2, 2>(2 * p, 2 * p) = c * Matrix2::Identity();
      u.block<2, 2>(2 * q, 2 * q) = c * Matrix2::Identity();
      u.block<2, 2>(2 * p, 2 * q) = -s * s1;
      u.block<2, 2>(2 * q, 2 * p) = s * s1;
    }
    return u;
  };
  WalkOperator w;
  w.factors.push_back({"U_even", half(0)});
  w.factors.push_back({"U_odd", half(1)});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

WalkOperator build_two_angle_walk(double theta1, double theta2,
                                  const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  WalkOperator w;
  w.factors.push_back({"S^R", shift_SR(n)});
  w.factors.push_back({"C(-theta1)", coin_C(n, -theta1)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"C(theta2)", coin_C(n, theta2)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"(S^R)^-1", shift_SR(n).adjoint()});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

}  // namespace lgtwalk

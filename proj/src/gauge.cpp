#include "lgtwalk/gauge.hpp"

#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace {
const Complex kI(0.0, 1.0);
int wrap(int p, int n) { return ((p % n) + n) % n; }

Matrix site_phases(int n_sites, const Eigen::VectorXd& phase, double sign) {
  Matrix u = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) {
    const Complex e = std::exp(kI * sign * phase(p));
    u(2 * p, 2 * p) = e;
    u(2 * p + 1, 2 * p + 1) = e;
  }
  return u;
}
}  // namespace

void GaugeConfig::validate() const {
  if (a0.cols() != a1.cols())
    throw std::invalid_argument("GaugeConfig: A0/A1 site counts differ");
  if (a1.rows() != a0.rows() + 1)
    throw std::invalid_argument(
        "GaugeConfig: A1 must carry one extra time slice");
  if (a0.rows() < 1) throw std::invalid_argument("GaugeConfig: empty window");
}

Eigen::VectorXd GaugeConfig::alpha(const WalkParams& params, int j) const {
  if (j < 0 || j >= j_max())
    throw std::out_of_range("GaugeConfig: time index outside window");
  return params.dt * q * a0.row(j).transpose();
}

Eigen::VectorXd GaugeConfig::vartheta(const WalkParams& params, int j) const {
  if (j < 0 || j >= j_max())
    throw std::out_of_range("GaugeConfig: time index outside window");
  return -params.a * q * a1.row(j + 1).transpose();
}

Matrix coin_gauged(int n_sites, double theta, const Eigen::VectorXd& vth) {
  Matrix u = Matrix::Zero(2 * n_sites, 2 * n_sites);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for (int p = 0; p < n_sites; ++p) {
    u(2 * p, 2 * p) = std::exp(kI * vth(p)) * c;
    u(2 * p, 2 * p + 1) = -s;
    u(2 * p + 1, 2 * p) = s;
    u(2 * p + 1, 2 * p + 1) = std::exp(-kI * vth(p)) * c;
  }
  return u;
}

Matrix shift_SL_phase(int n_sites, const Eigen::VectorXd& vth) {
  Matrix u = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) {
    u(2 * p, 2 * p) = std::exp(kI * vth(p));
    u(2 * p + 1, 2 * p + 1) = 1.0;
  }
  return u;
}

Matrix shift_SR_phase(int n_sites, const Eigen::VectorXd& vth) {
  Matrix u = Matrix::Zero(2 * n_sites, 2 * n_sites);
  for (int p = 0; p < n_sites; ++p) {
    u(2 * p, 2 * p) = 1.0;
    u(2 * p + 1, 2 * p + 1) = std::exp(-kI * vth(p));
  }
  return u;
}

WalkOperator build_gauged_leftright_step(const WalkParams& params,
                                         const GaugeConfig& gauge, int j) {
  params.validate();
  gauge.validate();
  const int n = params.n_sites;
  const Eigen::VectorXd al = gauge.alpha(params, j);
  const Eigen::VectorXd vth = gauge.vartheta(params, j);
  const double th = params.theta();
  WalkOperator w;
  w.factors.push_back({"e^{-i alpha}", site_phases(n, al, -1.0)});
  w.factors.push_back({"C(-theta)", coin_C(n, -th)});
  w.factors.push_back({"S^R", shift_SR(n)});
  w.factors.push_back({"S^R_vth", shift_SR_phase(n, vth)});
  w.factors.push_back({"C(theta)", coin_C(n, th)});
  w.factors.push_back({"S^L_vth", shift_SL_phase(n, vth)});
  w.factors.push_back({"S^L", shift_SL(n)});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

WalkOperator build_gauged_naive_step(const WalkParams& params,
                                     const GaugeConfig& gauge, int j) {
  params.validate();
  gauge.validate();
  const int n = params.n_sites;
  const Eigen::VectorXd al = gauge.alpha(params, j);
  const Eigen::VectorXd vth = gauge.vartheta(params, j);
  const double th = params.theta_tilde();
  WalkOperator w;
  w.factors.push_back({"e^{-i alpha}", site_phases(n, al, -1.0)});
  w.factors.push_back({"S^R", shift_SR(n)});
  w.factors.push_back({"C^g(-theta~, vth)", coin_gauged(n, -th, vth)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"C^g(theta~, vth)", coin_gauged(n, th, vth)});
  w.factors.push_back({"S", shift_S(n)});
  w.factors.push_back({"(S^R)^-1", shift_SR(n).adjoint()});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

LatticeOperator build_gauged_leftright_hamiltonian(const WalkParams& params,
                                                   const GaugeConfig& gauge,
                                                   int j) {
  params.validate();
  gauge.validate();
  const int n = params.n_sites;
  const double a = params.a;
  const Eigen::VectorXd vth = gauge.vartheta(params, j);
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  for (int p = 0; p < n; ++p) {
    const int L = 2 * p, R = 2 * p + 1;
    const int pm1 = wrap(p - 1, n);
    h(L, R) += -kI / a;
    h(L, 2 * pm1 + 1) += (kI / a) * std::exp(-kI * vth(pm1));
    h(R, 2 * wrap(p + 1, n)) += (-kI / a) * std::exp(kI * vth(p));
    h(R, L) += kI / a;
    h(L, L) += gauge.q * gauge.a0(j, p);
    h(R, R) += gauge.q * gauge.a0(j, p);
  }
  return {h, Basis::LRPosition, params};
}

LatticeOperator build_gauged_naive_hamiltonian(const WalkParams& params,
                                               const GaugeConfig& gauge,
                                               int j) {
  params.validate();
  gauge.validate();
  const int n = params.n_sites;
  const double a = params.a;
  const Eigen::VectorXd vth = gauge.vartheta(params, j);
  const Matrix2 s1 = basis2x2::sigma1();
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  for (int p = 0; p < n; ++p) {
    const int q = wrap(p + 1, n);
    h.block<2, 2>(2 * p, 2 * q) +=
        (-kI / (2.0 * a)) * std::exp(kI * vth(p)) * s1;
    h.block<2, 2>(2 * q, 2 * p) +=
        (kI / (2.0 * a)) * std::exp(-kI * vth(p)) * s1;
    h.block<2, 2>(2 * p, 2 * p) +=
        gauge.q * gauge.a0(j, p) * Matrix2::Identity();
  }
  return {h, Basis::LRPosition, params};
}

std::pair<SpinorField, GaugeConfig> apply_gauge_transform(
    const SpinorField& state, const GaugeConfig& gauge,
    const GaugeTransform& transform, int j) {
  gauge.validate();
  const int n = gauge.n_sites();
  const int jmax = gauge.j_max();
  if (transform.phi.rows() != jmax + 1 || transform.phi.cols() != n)
    throw std::invalid_argument("apply_gauge_transform: phi shape mismatch");
  if (j < 0 || j > jmax)
    throw std::out_of_range("apply_gauge_transform: time index outside window");
  if (state.amps.size() != 2 * n)
    throw std::invalid_argument("apply_gauge_transform: state size mismatch");

  SpinorField out_state = state;
  for (int p = 0; p < n; ++p) {
    const Complex e = std::exp(kI * gauge.q * transform.phi(j, p));
    out_state.amps(2 * p) *= e;
    out_state.amps(2 * p + 1) *= e;
  }

  GaugeConfig out = gauge;
  const auto& phi = transform.phi;
  const double dt = state.params.dt, a = state.params.a;
  for (int jj = 0; jj < jmax; ++jj)
    for (int p = 0; p < n; ++p)
      out.a0(jj, p) -= (phi(jj + 1, p) - phi(jj, p)) / dt;
  // A1 slice jj pairs with step jj-1, hence with the phi slice jj-1; the
  // unused slice 0 follows slice 0 of phi so constant-in-time phi shifts all
  // slices identically.
  for (int jj = 0; jj <= jmax; ++jj) {
    const int jphi = std::max(jj - 1, 0);
    for (int p = 0; p < n; ++p)
      out.a1(jj, p) += (phi(jphi, wrap(p + 1, n)) - phi(jphi, p)) / a;
  }
  return {out_state, out};
}

double field_strength_F01(const GaugeConfig& gauge, const WalkParams& params,
                          int j, int p) {
  gauge.validate();
  const int n = gauge.n_sites();
  if (j < 0 || j + 2 >= static_cast<int>(gauge.a1.rows()) || j >= gauge.j_max())
    throw std::out_of_range("field_strength_F01: needs steps j and j+1 in window");
  if (p < 0 || p >= n) throw std::out_of_range("field_strength_F01: site index");
  const int p1 = wrap(p + 1, n);
  return (gauge.a1(j + 2, p) - gauge.a1(j + 1, p)) / params.dt +
         (gauge.a0(j, p1) - gauge.a0(j, p)) / params.a;
}

Complex plaquette_U01(const GaugeConfig& gauge, const WalkParams& params,
                      int j, int p) {
  return std::exp(kI * gauge.q * params.a * params.a *
                  field_strength_F01(gauge, params, j, p));
}

int large_shift_pattern(const Eigen::MatrixXi& w0, const Eigen::MatrixXi& w1,
                        int j, int p) {
  const int n = static_cast<int>(w0.cols());
  const int p1 = wrap(p + 1, n);
  return (w1(j + 2, p) - w1(j + 1, p)) + (w0(j, p1) - w0(j, p));
}

GaugeConfig apply_large_shift(const GaugeConfig& gauge,
                              const WalkParams& params,
                              const Eigen::MatrixXi& w0,
                              const Eigen::MatrixXi& w1) {
  gauge.validate();
  if (w0.rows() != gauge.a0.rows() || w0.cols() != gauge.a0.cols() ||
      w1.rows() != gauge.a1.rows() || w1.cols() != gauge.a1.cols())
    throw std::invalid_argument("apply_large_shift: pattern shape mismatch");
  GaugeConfig out = gauge;
  out.a0 += (2.0 * kPi / (gauge.q * params.dt)) * w0.cast<double>();
  out.a1 += (2.0 * kPi / (gauge.q * params.a)) * w1.cast<double>();
  return out;
}

}  // namespace lgtwalk

#include "lgtwalk.h"

#include <json.hpp>

#include <cstring>
#include <random>
#include <string>

#include "lgtwalk/digitize.hpp"
#include "lgtwalk/equivalence.hpp"
#include "lgtwalk/gauge.hpp"
#include "lgtwalk/hamiltonians.hpp"
#include "lgtwalk/lattice.hpp"
#include "lgtwalk/verify.hpp"

using json = nlohmann::json;
using namespace lgtwalk;

namespace {

thread_local std::string g_last_error;

int fail_invalid(const std::string& msg) {
  g_last_error = msg;
  return LGW_ERR_INVALID;
}

WalkParams to_params(const lgw_params* p) {
  WalkParams out;
  out.a = p->a;
  out.dt = p->dt;
  out.m = p->m;
  out.r = p->r;
  out.n_sites = p->n_sites;
  out.validate();
  return out;
}

GaugeConfig parse_gauge(const char* gauge_json) {
  if (gauge_json == nullptr)
    throw std::invalid_argument("gauged scheme requires a gauge field JSON");
  const json j = json::parse(gauge_json);
  GaugeConfig g;
  g.q = j.at("q").get<double>();
  auto load = [](const json& rows) {
    const size_t nr = rows.size();
    if (nr == 0) throw std::invalid_argument("empty potential array");
    const size_t nc = rows.at(0).size();
    Eigen::MatrixXd m(nr, nc);
    for (size_t r = 0; r < nr; ++r) {
      if (rows.at(r).size() != nc)
        throw std::invalid_argument("ragged potential array");
      for (size_t c = 0; c < nc; ++c) m(r, c) = rows.at(r).at(c).get<double>();
    }
    return m;
  };
  g.a0 = load(j.at("A0"));
  g.a1 = load(j.at("A1"));
  g.validate();
  return g;
}

bool is_gauged(const std::string& s) {
  return s == "gauged-leftright" || s == "gauged-naive" ||
         s == "h-gauged-leftright" || s == "h-gauged-naive";
}

Matrix build_scheme(const WalkParams& p, const std::string& scheme,
                    const char* gauge_json, int j) {
  if (scheme == "h-leftright") return build_left_right(p).mat;
  if (scheme == "h-naive") return build_naive(p).mat;
  if (scheme == "h-wilson") return build_wilson(p).mat;
  if (scheme == "h-staggered") return build_staggered(p).mat;
  if (scheme == "u-mass") return build_U_mass(p).op.mat;
  if (scheme == "u-on") return build_U_on(p).op.mat;
  if (scheme == "u-int") return build_U_int(p).op.mat;
  if (scheme == "u-transport") return build_U_transport(p).op.mat;
  if (scheme == "dtqw-compact") return build_dtqw_compact(p).op.mat;
  if (scheme == "naive-dtqw") return build_naive_dtqw(p).op.mat;
  if (scheme == "wilson-dtqw") return build_wilson_dtqw(p).op.mat;
  if (scheme == "even-odd") return build_even_odd(p).op.mat;
  if (scheme == "strauch") return strauch_operator(p.theta_tilde(), p).op.mat;
  if (is_gauged(scheme)) {
    const GaugeConfig g = parse_gauge(gauge_json);
    if (g.n_sites() != p.n_sites)
      throw std::invalid_argument("gauge field site count mismatch");
    if (scheme == "gauged-leftright")
      return build_gauged_leftright_step(p, g, j).op.mat;
    if (scheme == "gauged-naive") return build_gauged_naive_step(p, g, j).op.mat;
    if (scheme == "h-gauged-leftright")
      return build_gauged_leftright_hamiltonian(p, g, j).mat;
    return build_gauged_naive_hamiltonian(p, g, j).mat;
  }
  throw std::invalid_argument("unknown scheme: " + scheme);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool greater;  // pass when value > tolerance instead of <=
};

json run_checks(const std::vector<Check>& checks, bool* all_pass) {
  json arr = json::array();
  *all_pass = true;
  for (const auto& c : checks) {
    const bool ok = c.greater ? (c.value > c.tolerance) : (c.value <= c.tolerance);
    *all_pass = *all_pass && ok;
    arr.push_back({{"name", c.name},
                   {"value", c.value},
                   {"tolerance", c.tolerance},
                   {"comparison", c.greater ? ">" : "<="},
                   {"pass", ok}});
  }
  return arr;
}

double unitarity_error(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

GaugeConfig random_gauge(int j_max, int n, unsigned seed, double q) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  GaugeConfig g;
  g.q = q;
  g.a0 = Eigen::MatrixXd(j_max, n);
  g.a1 = Eigen::MatrixXd(j_max + 1, n);
  for (int jj = 0; jj < j_max; ++jj)
    for (int p = 0; p < n; ++p) g.a0(jj, p) = dist(rng);
  for (int jj = 0; jj <= j_max; ++jj)
    for (int p = 0; p < n; ++p) g.a1(jj, p) = dist(rng);
  return g;
}

Eigen::MatrixXd random_phi(int j_max, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXd phi(j_max + 1, n);
  for (int jj = 0; jj <= j_max; ++jj)
    for (int p = 0; p < n; ++p) phi(jj, p) = dist(rng);
  return phi;
}

// Max covariance error of one gauged step under a gauge transform.
double covariance_error(const WalkParams& p, const GaugeConfig& g,
                        const Eigen::MatrixXd& phi, int j, bool naive,
                        unsigned seed) {
  const int n = p.n_sites;
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  SpinorField psi{Vector(2 * n), p};
  for (int i = 0; i < 2 * n; ++i) psi.amps(i) = Complex(dist(rng), dist(rng));
  auto [psi_t, g_t] = apply_gauge_transform(psi, g, {phi}, j);
  const Matrix u = naive ? build_gauged_naive_step(p, g, j).op.mat
                         : build_gauged_leftright_step(p, g, j).op.mat;
  const Matrix ut = naive ? build_gauged_naive_step(p, g_t, j).op.mat
                          : build_gauged_leftright_step(p, g_t, j).op.mat;
  Vector lhs = ut * psi_t.amps;
  Vector rhs = u * psi.amps;
  for (int s = 0; s < n; ++s) {
    const Complex e = std::exp(Complex(0, 1) * g.q * phi(j + 1, s));
    rhs(2 * s) *= e;
    rhs(2 * s + 1) *= e;
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

json suite_unitarity(const WalkParams& base, bool* passed) {
  std::vector<Check> checks;
  const std::vector<std::pair<std::string, Matrix>> walks = {
      {"u-transport", build_U_transport(base).op.mat},
      {"dtqw-compact", build_dtqw_compact(base).op.mat},
      {"naive-dtqw", build_naive_dtqw(base).op.mat},
      {"wilson-dtqw", build_wilson_dtqw(base).op.mat},
      {"even-odd", build_even_odd(base).op.mat},
      {"strauch", strauch_operator(base.theta_tilde(), base).op.mat},
      {"u-mass", build_U_mass(base).op.mat},
  };
  for (const auto& [name, u] : walks)
    checks.push_back({"unitarity " + name, unitarity_error(u), 1e-12, false});
  return run_checks(checks, passed);
}

json suite_ultralocality(const WalkParams& base, bool* passed) {
  WalkParams p = base;
  p.n_sites = std::max(base.n_sites, 64);
  const int steps = 10;
  std::vector<Check> checks;
  auto cone = [&](const std::string& name, const Matrix& u, int radius) {
    const auto rep =
        light_cone_scan(u, p, radius, steps, p.n_sites / 2, name);
    double worst = 0.0;
    for (double v : rep.outside_mass) worst = std::max(worst, v);
    checks.push_back({"outside-cone mass " + name, worst, 1e-15, false});
  };
  cone("dtqw-compact", build_dtqw_compact(p).op.mat, 1);
  cone("naive-dtqw", build_naive_dtqw(p).op.mat, 2);
  cone("wilson-dtqw", build_wilson_dtqw(p).op.mat, 2);
  cone("even-odd", build_even_odd(p).op.mat, 2);
  // Exact exponential leaks at any distance.
  WalkParams pe = base;
  pe.n_sites = 16;
  pe.dt = 0.5 * pe.a;
  const Matrix uh =
      expm(Matrix(Complex(0, -1) * pe.dt * build_left_right_transport(pe).mat));
  Vector peak = Vector::Zero(2 * pe.n_sites);
  peak(2 * (pe.n_sites / 2)) = 1.0;
  const Vector after = uh * peak;
  // three staggered sites away from the peak component
  const double leak = std::norm(after(2 * (pe.n_sites / 2) + 3));
  checks.push_back({"exponential leakage at distance 3", leak, 1e-6, true});
  return run_checks(checks, passed);
}

json suite_equivalence(const WalkParams& base, bool* passed) {
  std::vector<Check> checks;
  const Matrix ut = build_U_transport(base).op.mat;
  const Matrix uc = build_dtqw_compact(base).op.mat;
  checks.push_back(
      {"coined form equals Trotter product", (ut - uc).cwiseAbs().maxCoeff(),
       1e-13, false});
  const Matrix un = build_naive_dtqw(base).op.mat;
  const Matrix ue = build_even_odd(base).op.mat;
  checks.push_back({"even-odd isospectral to two-substep walk",
                    spectral_compare(ue, un, true), 1e-10, false});
  const double th = base.theta_tilde();
  const Matrix o = strauch_operator(th, base).op.mat;
  const Matrix psl =
      per_site(base.n_sites, basis2x2::P()) * shift_SL(base.n_sites);
  const Matrix w2 = build_two_angle_walk(-th, th, base).op.mat;
  checks.push_back({"Strauch conjugation identity",
                    (o + psl * w2 * psl.inverse()).cwiseAbs().maxCoeff(), 1e-13,
                    false});
  double worst = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double K = -kPi + 2.0 * kPi * i / 16;
    const auto b = mapping_B_of_K(K, base).matrix;
    const auto u4 = fourier_block_even_odd(K, base).matrix;
    const auto w4 = fourier_block_naive(K, base).matrix;
    worst = std::max(worst,
                     (b * u4 * b.inverse() - w4).cwiseAbs().maxCoeff());
  }
  checks.push_back({"Fourier-block conjugation", worst, 1e-12, false});
  const Matrix dec = even_odd_coin_decomposition(base).op.mat;
  checks.push_back({"even-odd coin decomposition",
                    (dec - ue).cwiseAbs().maxCoeff(), 1e-12, false});
  return run_checks(checks, passed);
}

json suite_gauge(const WalkParams& base, const char* gauge_json, unsigned seed,
                 bool* passed) {
  const int j_max = 4;
  GaugeConfig g = (gauge_json != nullptr)
                      ? parse_gauge(gauge_json)
                      : random_gauge(j_max, base.n_sites, seed, 1.3);
  if (g.n_sites() != base.n_sites)
    throw std::invalid_argument("gauge field site count mismatch");
  const WalkParams p = base;
  std::vector<Check> checks;
  double worst_lr = 0.0, worst_n = 0.0, worst_f = 0.0;
  for (int t = 0; t < 5; ++t) {
    const Eigen::MatrixXd phi = random_phi(g.j_max(), p.n_sites, seed + 17 * t + 1);
    const int j = g.j_max() >= 2 ? 1 : 0;
    worst_lr =
        std::max(worst_lr, covariance_error(p, g, phi, j, false, seed + t));
    worst_n =
        std::max(worst_n, covariance_error(p, g, phi, j, true, seed + t));
    SpinorField dummy{Vector::Zero(2 * p.n_sites), p};
    const GaugeConfig g_t = apply_gauge_transform(dummy, g, {phi}, 0).second;
    for (int jj = 0; jj + 2 <= g.j_max(); ++jj)
      for (int s = 0; s < p.n_sites; ++s)
        worst_f = std::max(worst_f,
                           std::abs(field_strength_F01(g_t, p, jj, s) -
                                    field_strength_F01(g, p, jj, s)));
  }
  checks.push_back({"covariance gauged coined step", worst_lr, 1e-12, false});
  checks.push_back({"covariance gauged two-substep step", worst_n, 1e-12, false});
  checks.push_back({"F01 gauge invariance", worst_f, 1e-12, false});
  for (const auto& [name, u] :
       {std::pair<std::string, Matrix>{"gauged coined step",
                                       build_gauged_leftright_step(p, g, 0).op.mat},
        std::pair<std::string, Matrix>{"gauged two-substep step",
                                       build_gauged_naive_step(p, g, 0).op.mat}})
    checks.push_back({"unitarity " + name, unitarity_error(u), 1e-12, false});
  return run_checks(checks, passed);
}

json suite_convergence(const WalkParams& base, bool* passed) {
  const std::vector<double> grid = {0.2 * base.a, 0.1 * base.a, 0.05 * base.a,
                                    0.025 * base.a};
  auto walk = [](const WalkParams& p) { return build_dtqw_compact(p).op.mat; };
  auto ham = [](const WalkParams& p) {
    return build_left_right_transport(p).mat;
  };
  const auto per_step = continuum_time_limit(walk, ham, base, grid);
  const auto horizon =
      continuum_time_limit_horizon(walk, ham, base, grid, 1.0 * base.a);
  std::vector<Check> checks;
  checks.push_back({"per-step order deviation from 2",
                    std::abs(per_step.fitted_order - 2.0), 0.2, false});
  checks.push_back({"fixed-horizon order deviation from 1",
                    std::abs(horizon.fitted_order - 1.0), 0.2, false});
  checks.push_back({"per-step fit residual", per_step.fit_residual, 0.1, false});
  return run_checks(checks, passed);
}

json suite_symmetry(const WalkParams& base, bool* passed) {
  WalkParams p0 = base;
  p0.m = 0.0;
  std::vector<Check> checks;
  checks.push_back({"[H_stag(m=0), T1]",
                    symmetry_witness(build_staggered(p0), SymmetryKind::T1Staggered),
                    1e-12, false});
  LatticeOperator ut{build_U_transport(p0).op.mat, Basis::StaggeredPosition, p0};
  checks.push_back({"[U^t, T2]",
                    symmetry_witness(ut, SymmetryKind::T2Staggered), 1e-12,
                    false});
  if (p0.dt > 0.0)
    checks.push_back({"[U^t, T1] broken",
                      symmetry_witness(ut, SymmetryKind::T1Staggered), 0.05,
                      true});
  checks.push_back(
      {"massless Wilson chiral breaking",
       symmetry_witness(build_wilson(p0), SymmetryKind::Gamma5), 1e-6, true});
  checks.push_back(
      {"massless naive chiral symmetry",
       symmetry_witness(build_naive(p0), SymmetryKind::Gamma5), 1e-12, false});
  return run_checks(checks, passed);
}

}  // namespace

extern "C" {

struct lgw_operator {
  Matrix mat;
  lgw_params params;
};

const char* lgw_last_error(void) { return g_last_error.c_str(); }

int lgw_build_operator(const lgw_params* params, const char* scheme,
                       const char* gauge_json, int time_index,
                       lgw_operator** out) {
  if (params == nullptr || scheme == nullptr || out == nullptr)
    return fail_invalid("null argument");
  try {
    const WalkParams p = to_params(params);
    Matrix m = build_scheme(p, scheme, gauge_json, time_index);
    *out = new lgw_operator{std::move(m), *params};
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

void lgw_operator_free(lgw_operator* op) { delete op; }

int lgw_operator_dim(const lgw_operator* op, int* dim) {
  if (op == nullptr || dim == nullptr) return fail_invalid("null argument");
  *dim = static_cast<int>(op->mat.rows());
  return LGW_OK;
}

int lgw_operator_data(const lgw_operator* op, double* buf, size_t buf_len) {
  if (op == nullptr || buf == nullptr) return fail_invalid("null argument");
  const size_t d = op->mat.rows();
  if (buf_len < 2 * d * d) return fail_invalid("buffer too small");
  size_t idx = 0;
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) {
      buf[idx++] = op->mat(r, c).real();
      buf[idx++] = op->mat(r, c).imag();
    }
  return LGW_OK;
}

int lgw_operator_apply(const lgw_operator* op, const double* in, double* out) {
  if (op == nullptr || in == nullptr || out == nullptr)
    return fail_invalid("null argument");
  const int d = static_cast<int>(op->mat.rows());
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(in[2 * i], in[2 * i + 1]);
  const Vector w = op->mat * v;
  for (int i = 0; i < d; ++i) {
    out[2 * i] = w(i).real();
    out[2 * i + 1] = w(i).imag();
  }
  return LGW_OK;
}

int lgw_operator_spectrum(const lgw_operator* op, int unitary, double* buf,
                          size_t buf_len) {
  if (op == nullptr || buf == nullptr) return fail_invalid("null argument");
  const size_t d = op->mat.rows();
  if (buf_len < 2 * d) return fail_invalid("buffer too small");
  try {
    // Reuse the phase-sorted comparison path for a deterministic order.
    Eigen::ComplexEigenSolver<Matrix> es(op->mat, false);
    std::vector<Complex> ev(es.eigenvalues().data(),
                            es.eigenvalues().data() + d);
    std::sort(ev.begin(), ev.end(), [&](const Complex& x, const Complex& y) {
      if (unitary) {
        const double ax = std::arg(x), ay = std::arg(y);
        if (std::abs(ax - ay) > 1e-12) return ax < ay;
      }
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    });
    for (size_t i = 0; i < d; ++i) {
      buf[2 * i] = ev[i].real();
      buf[2 * i + 1] = ev[i].imag();
    }
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

int lgw_operator_unitarity_error(const lgw_operator* op, double* err) {
  if (op == nullptr || err == nullptr) return fail_invalid("null argument");
  *err = unitarity_error(op->mat);
  return LGW_OK;
}

int lgw_per_step_error(const lgw_params* params, const char* scheme,
                       double* err) {
  if (params == nullptr || scheme == nullptr || err == nullptr)
    return fail_invalid("null argument");
  try {
    const WalkParams p = to_params(params);
    WalkParams p0 = p;
    p0.m = 0.0;  // the walks are transport factors; compare massless
    const std::string name(scheme);
    Matrix u, h;
    if (name == "u-transport" || name == "dtqw-compact") {
      u = build_scheme(p0, name, nullptr, 0);
      h = build_left_right_transport(p0).mat;
    } else if (name == "naive-dtqw") {
      u = build_naive_dtqw(p0).op.mat;
      h = build_naive(p0).mat;
    } else if (name == "wilson-dtqw") {
      u = build_wilson_dtqw(p0).op.mat;
      // The Wilson walk digitizes the nearest-neighbor part of the Wilson
      // term; strip the naive part and the diagonal.
      h = build_wilson(p0).mat - build_naive(p0).mat;
      h.diagonal().setZero();
    } else if (name == "even-odd") {
      u = build_even_odd(p0).op.mat;
      h = build_naive(p0).mat;
    } else {
      return fail_invalid("per-step error undefined for scheme: " + name);
    }
    const Matrix diff = u - expm(Matrix(Complex(0, -1) * p.dt * h));
    *err = diff.jacobiSvd().singularValues()(0);
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

int lgw_run_verify_suite(const lgw_params* params, const char* suite,
                         const char* gauge_json, unsigned seed, char** report,
                         int* passed) {
  if (params == nullptr || suite == nullptr || report == nullptr ||
      passed == nullptr)
    return fail_invalid("null argument");
  try {
    const WalkParams p = to_params(params);
    const std::string name(suite);
    bool ok = false;
    json checks;
    if (name == "unitarity")
      checks = suite_unitarity(p, &ok);
    else if (name == "ultralocality")
      checks = suite_ultralocality(p, &ok);
    else if (name == "equivalence")
      checks = suite_equivalence(p, &ok);
    else if (name == "gauge")
      checks = suite_gauge(p, gauge_json, seed, &ok);
    else if (name == "convergence")
      checks = suite_convergence(p, &ok);
    else if (name == "symmetry")
      checks = suite_symmetry(p, &ok);
    else
      return fail_invalid("unknown suite: " + name);
    json rep = {{"suite", name},
                {"seed", seed},
                {"params",
                 {{"a", p.a},
                  {"dt", p.dt},
                  {"m", p.m},
                  {"r", p.r},
                  {"n_sites", p.n_sites},
                  {"delta", p.delta()},
                  {"theta", p.theta()},
                  {"delta_tilde", p.delta_tilde()},
                  {"theta_tilde", p.theta_tilde()}}},
                {"checks", checks},
                {"passed", ok}};
    *report = dup_string(rep.dump(2));
    *passed = ok ? 1 : 0;
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

int lgw_map_coefficients(const lgw_params* params, int max_offset,
                         int quadrature_points, char** report) {
  if (params == nullptr || report == nullptr)
    return fail_invalid("null argument");
  try {
    const WalkParams p = to_params(params);
    const auto coeffs =
        mapping_real_space_coefficients(p, max_offset, quadrature_points);
    json entries = json::array();
    for (const auto& [off, b] : coeffs.entries) {
      json mat = json::array();
      double maxabs = 0.0;
      for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) {
          row.push_back({b(r, c).real(), b(r, c).imag()});
          maxabs = std::max(maxabs, std::abs(b(r, c)));
        }
        mat.push_back(row);
      }
      entries.push_back({{"offset", off}, {"matrix", mat}, {"max_abs", maxabs}});
    }
    json rep = {{"delta_tilde", p.delta_tilde()},
                {"max_offset", max_offset},
                {"quadrature_points", quadrature_points},
                {"coefficients", entries}};
    *report = dup_string(rep.dump(2));
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

int lgw_gauge_check(const lgw_params* params, const char* gauge_json,
                    unsigned seed, char** report, int* passed) {
  if (params == nullptr || report == nullptr || passed == nullptr)
    return fail_invalid("null argument");
  try {
    const WalkParams p0 = to_params(params);
    GaugeConfig g = (gauge_json != nullptr)
                        ? parse_gauge(gauge_json)
                        : random_gauge(4, p0.n_sites, seed, 1.3);
    if (g.n_sites() != p0.n_sites)
      throw std::invalid_argument("gauge field site count mismatch");
    const WalkParams p = p0;
    bool ok = false;
    json checks = suite_gauge(p, gauge_json, seed, &ok);
    json f01 = json::array();
    for (int jj = 0; jj + 2 <= g.j_max(); ++jj) {
      json row = json::array();
      for (int s = 0; s < g.n_sites(); ++s) {
        const double f = field_strength_F01(g, p, jj, s);
        const Complex u01 = plaquette_U01(g, p, jj, s);
        row.push_back({{"F01", f}, {"U01", {u01.real(), u01.imag()}}});
      }
      f01.push_back(row);
    }
    json rep = {{"q", g.q},
                {"window", {{"j_max", g.j_max()}, {"n_sites", g.n_sites()}}},
                {"observables", f01},
                {"checks", checks},
                {"passed", ok}};
    *report = dup_string(rep.dump(2));
    *passed = ok ? 1 : 0;
    return LGW_OK;
  } catch (const std::exception& e) {
    return fail_invalid(e.what());
  }
}

void lgw_string_free(char* s) { std::free(s); }

}  // extern "C"

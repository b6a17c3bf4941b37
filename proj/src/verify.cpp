#include "lgtwalk/verify.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace {
const Complex kI(0.0, 1.0);

double spectral_norm(const Matrix& m) {
  return m.jacobiSvd().singularValues()(0);
}

std::vector<Complex> sorted_spectrum(const Matrix& m, bool unitary) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  std::vector<Complex> ev(es.eigenvalues().data(),
                          es.eigenvalues().data() + m.rows());
  if (unitary) {
    std::sort(ev.begin(), ev.end(), [](const Complex& x, const Complex& y) {
      const double ax = std::arg(x), ay = std::arg(y);
      if (std::abs(ax - ay) > 1e-12) return ax < ay;
      return x.real() < y.real();
    });
  } else {
    std::sort(ev.begin(), ev.end(), [](const Complex& x, const Complex& y) {
      return x.real() < y.real();
    });
  }
  return ev;
}
}  // namespace

Matrix expm(const Matrix& m) { return m.exp(); }

ConvergenceReport fit_order(const std::string& swept,
                            const std::vector<double>& values,
                            const std::vector<double>& errors) {
  if (values.size() != errors.size() || values.size() < 2)
    throw std::invalid_argument("fit_order: need >= 2 matching samples");
  const int n = static_cast<int>(values.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    if (errors[i] <= 0.0)
      throw std::invalid_argument("fit_order: errors must be positive");
    lx[i] = std::log(values[i]);
    ly[i] = std::log(errors[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-14)
    throw std::invalid_argument("fit_order: singular fit");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = ly[i] - (slope * lx[i] + intercept);
    res += d * d;
  }
  ConvergenceReport rep;
  rep.swept = swept;
  rep.values = values;
  rep.errors = errors;
  rep.fitted_order = slope;
  rep.fit_residual = std::sqrt(res / n);
  return rep;
}

ConvergenceReport continuum_time_limit(
    const std::function<Matrix(const WalkParams&)>& walk_builder,
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    WalkParams base, const std::vector<double>& dt_grid) {
  std::vector<double> errors;
  for (double dt : dt_grid) {
    WalkParams p = base;
    p.dt = dt;
    const Matrix u = walk_builder(p);
    const Matrix h = hamiltonian(p);
    errors.push_back(spectral_norm(u - expm(Matrix(-kI * dt * h))));
  }
  return fit_order("dt", dt_grid, errors);
}

ConvergenceReport continuum_time_limit_horizon(
    const std::function<Matrix(const WalkParams&)>& walk_builder,
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    WalkParams base, const std::vector<double>& dt_grid, double horizon) {
  std::vector<double> errors;
  for (double dt : dt_grid) {
    WalkParams p = base;
    p.dt = dt;
    const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));
    const Matrix u = walk_builder(p);
    const Matrix h = hamiltonian(p);
    Matrix uj = Matrix::Identity(u.rows(), u.cols());
    for (int j = 0; j < steps; ++j) uj = u * uj;
    errors.push_back(
        spectral_norm(uj - expm(Matrix(-kI * (steps * dt) * h))));
  }
  return fit_order("dt", dt_grid, errors);
}

ConvergenceReport continuum_space_limit(
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    const std::function<Matrix2(double k, double m)>& continuum_block,
    WalkParams base, const std::vector<double>& a_grid, int k_mode) {
  const double box = base.n_sites * base.a;
  const double horizon = 1.0;
  // Band-limit check on the coarsest grid.
  int n_coarse = static_cast<int>(std::llround(box / a_grid.front()));
  if (std::abs(k_mode) >= n_coarse / 2)
    throw std::invalid_argument(
        "continuum_space_limit: initial data aliases on the coarsest grid");
  std::vector<double> errors;
  for (double a : a_grid) {
    const int n = static_cast<int>(std::llround(box / a));
    if (n < 4 || n % 2 != 0)
      throw std::invalid_argument("continuum_space_limit: bad grid size");
    WalkParams p = base;
    p.a = a;
    p.n_sites = n;
    const double k = 2.0 * kPi * k_mode / box;
    const Matrix h = hamiltonian(p);
    Vector psi0 = Vector::Zero(2 * n);
    for (int s = 0; s < n; ++s)
      psi0(2 * s) = std::exp(kI * k * (s * a)) / std::sqrt(double(n));
    const Vector lat = expm(Matrix(-kI * horizon * h)) * psi0;
    const Matrix2 hc = continuum_block(k, p.m);
    const Eigen::Vector2cd v =
        Matrix2(Matrix2(-kI * horizon * hc).exp()) * Eigen::Vector2cd(1.0, 0.0);
    Vector cont = Vector::Zero(2 * n);
    for (int s = 0; s < n; ++s) {
      const Complex ph = std::exp(kI * k * (s * a)) / std::sqrt(double(n));
      cont(2 * s) = ph * v(0);
      cont(2 * s + 1) = ph * v(1);
    }
    errors.push_back((lat - cont).norm());
  }
  return fit_order("a", a_grid, errors);
}

LightConeReport light_cone_scan(const Matrix& step, const WalkParams& params,
                                int radius_per_step, int steps, int peak_site,
                                const std::string& label) {
  const int n = params.n_sites;
  if (n <= 2 * radius_per_step * steps + 2)
    throw std::invalid_argument("light_cone_scan: cone wraps around lattice");
  LightConeReport rep;
  rep.label = label;
  rep.radius_per_step = radius_per_step;
  Vector psi = Vector::Zero(2 * n);
  psi(2 * peak_site) = 1.0;
  for (int j = 1; j <= steps; ++j) {
    psi = step * psi;
    double outside = 0.0;
    for (int p = 0; p < n; ++p) {
      int d = std::abs(p - peak_site);
      d = std::min(d, n - d);
      if (d > radius_per_step * j)
        outside += std::norm(psi(2 * p)) + std::norm(psi(2 * p + 1));
    }
    rep.outside_mass.push_back(outside);
  }
  return rep;
}

Matrix staggered_translation(int dim, int sites) {
  Matrix t = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) t(i, (i + sites) % dim) = 1.0;
  return t;
}

double symmetry_witness(const LatticeOperator& op, SymmetryKind symmetry) {
  const int d = static_cast<int>(op.mat.rows());
  Matrix s;
  switch (symmetry) {
    case SymmetryKind::T1Staggered:
      s = staggered_translation(d, 1);
      break;
    case SymmetryKind::T2Staggered:
      s = staggered_translation(d, 2);
      break;
    case SymmetryKind::Gamma5:
      if (op.basis != Basis::LRPosition)
        throw std::invalid_argument(
            "symmetry_witness: gamma5 needs the LR basis");
      s = per_site(d / 2, basis2x2::gamma5());
      break;
  }
  return (op.mat * s - s * op.mat).cwiseAbs().maxCoeff();
}

double spectral_compare(const Matrix& op_a, const Matrix& op_b, bool unitary) {
  if (op_a.rows() != op_b.rows())
    throw std::invalid_argument("spectral_compare: dimension mismatch");
  const auto ea = sorted_spectrum(op_a, unitary);
  const auto eb = sorted_spectrum(op_b, unitary);
  double worst = 0.0;
  for (size_t i = 0; i < ea.size(); ++i)
    worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

int zero_mode_count(const Matrix& h, double threshold) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  int count = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < threshold) ++count;
  return count;
}

int doubling_count(const Matrix& h, double threshold) {
  return zero_mode_count(h, threshold) / 2;
}

}  // namespace lgtwalk

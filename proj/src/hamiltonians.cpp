#include "lgtwalk/hamiltonians.hpp"

#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace {
const Complex kI(0.0, 1.0);
int wrap(int p, int n) { return ((p % n) + n) % n; }
}  // namespace

LatticeOperator build_left_right_transport(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double a = params.a;
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  for (int p = 0; p < n; ++p) {
    const int L = lr_index(p, 0), R = lr_index(p, 1);
    const int Lp1 = lr_index(wrap(p + 1, n), 0);
    const int Rm1 = lr_index(wrap(p - 1, n), 1);
    // i dpsi^L_p/dt = (-i/a)(psi^R_p - psi^R_{p-1})
    h(L, R) += -kI / a;
    h(L, Rm1) += kI / a;
    // i dpsi^R_p/dt = (-i/a)(psi^L_{p+1} - psi^L_p)
    h(R, Lp1) += -kI / a;
    h(R, L) += kI / a;
  }
  return {h, Basis::LRPosition, params};
}

LatticeOperator build_left_right(const WalkParams& params) {
  LatticeOperator op = build_left_right_transport(params);
  for (int p = 0; p < params.n_sites; ++p) {
    op.mat(lr_index(p, 0), lr_index(p, 0)) += params.m;
    op.mat(lr_index(p, 1), lr_index(p, 1)) -= params.m;
  }
  return op;
}

LatticeOperator build_naive(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const double a = params.a;
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  const Matrix2 hop = (-kI / (2.0 * a)) * basis2x2::sigma1();
  const Matrix2 mass = params.m * (-basis2x2::sigma2());
  for (int p = 0; p < n; ++p) {
    const int q = wrap(p + 1, n);
    h.block<2, 2>(2 * p, 2 * q) += hop;
    h.block<2, 2>(2 * q, 2 * p) -= hop;
    h.block<2, 2>(2 * p, 2 * p) += mass;
  }
  return {h, Basis::LRPosition, params};
}

LatticeOperator build_wilson(const WalkParams& params) {
  LatticeOperator op = build_naive(params);
  const int n = params.n_sites;
  const Matrix2 w = (params.r / (2.0 * params.a)) * basis2x2::sigma3();
  for (int p = 0; p < n; ++p) {
    const int q = wrap(p + 1, n);
    op.mat.block<2, 2>(2 * p, 2 * p) += 2.0 * w;
    op.mat.block<2, 2>(2 * p, 2 * q) -= w;
    op.mat.block<2, 2>(2 * q, 2 * p) -= w;
  }
  return op;
}

LatticeOperator build_staggered(const WalkParams& params) {
  params.validate();
  const int d = params.dim();
  const double ap = params.a / 2.0;
  Matrix h = Matrix::Zero(d, d);
  for (int nn = 0; nn < d; ++nn) {
    const int np1 = wrap(nn + 1, d);
    h(nn, np1) += -kI / (2.0 * ap);
    h(np1, nn) += kI / (2.0 * ap);
    h(nn, nn) += params.m * ((nn % 2 == 0) ? 1.0 : -1.0);
  }
  return {h, Basis::StaggeredPosition, params};
}

std::pair<LatticeOperator, LatticeOperator> split_on_inter(
    const LatticeOperator& h_transport) {
  const LatticeOperator ref = build_left_right_transport(h_transport.params);
  if ((h_transport.mat - ref.mat).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument(
        "split_on_inter: input is not the left-right transport matrix");
  const int n = h_transport.params.n_sites;
  const double a = h_transport.params.a;
  LatticeOperator on{per_site(n, basis2x2::sigma2() / a), Basis::LRPosition,
                     h_transport.params};
  LatticeOperator inter{h_transport.mat - on.mat, Basis::LRPosition,
                        h_transport.params};
  return {on, inter};
}

}  // namespace lgtwalk

#include "lgtwalk/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "lgtwalk/lattice.hpp"

namespace lgtwalk {

namespace {
const Complex kI(0.0, 1.0);
int wrap(int p, int n) { return ((p % n) + n) % n; }
}  // namespace

WalkOperator strauch_operator(double theta, const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const Matrix sinv = shift_S(n).adjoint();
  WalkOperator w;
  w.factors.push_back({"S~", sinv});
  w.factors.push_back({"K(theta)", coin_K(n, theta)});
  w.factors.push_back({"S~", sinv});
  w.factors.push_back({"K(theta)", coin_K(n, theta)});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

FourierBlock4 fourier_block_even_odd(double K, const WalkParams& params) {
  const double c = std::cos(params.delta_tilde());
  const double s = std::sin(params.delta_tilde());
  const double c2 = c * c, s2 = s * s, sc = s * c;
  const Complex eK = std::exp(kI * K), emK = std::exp(-kI * K);
  Matrix4 u;
  u << c2 + s2 * eK, 0, 0, -sc * (1.0 - emK),
       0, c2 + s2 * eK, -sc * (1.0 - emK), 0,
       0, -sc * (eK - 1.0), c2 + s2 * emK, 0,
       -sc * (eK - 1.0), 0, 0, c2 + s2 * emK;
  return {K, u};
}

FourierBlock4 fourier_block_naive(double K, const WalkParams& params) {
  const double c = std::cos(params.delta_tilde());
  const double s = std::sin(params.delta_tilde());
  const double c2 = c * c, s2 = s * s, sc = s * c;
  const Complex eK = std::exp(kI * K), emK = std::exp(-kI * K);
  Matrix4 w;
  w << c2 + s2 * eK, 0, 0, -sc * (1.0 - emK),
       0, c2 + s2 * emK, -sc * (1.0 - emK), 0,
       0, -sc * (eK - 1.0), c2 + s2 * eK, 0,
       -sc * (eK - 1.0), 0, 0, c2 + s2 * emK;
  return {K, w};
}

Matrix4 extract_fourier_block(const Matrix& op, int n_sites, double K) {
  const int m = n_sites / 2;
  Matrix4 blk = Matrix4::Zero();
  for (int u = 0; u < 4; ++u) {
    Vector v = Vector::Zero(2 * n_sites);
    for (int l = 0; l < m; ++l)
      v(4 * l + u) = std::exp(kI * K * double(l)) / std::sqrt(double(m));
    const Vector w = op * v;
    for (int uu = 0; uu < 4; ++uu) {
      Complex acc = 0.0;
      for (int l = 0; l < m; ++l)
        acc += std::exp(-kI * K * double(l)) * w(4 * l + uu);
      blk(uu, u) = acc / std::sqrt(double(m));
    }
  }
  return blk;
}

FourierBlock4 mapping_B_of_K(double K, const WalkParams& params) {
  const double dtt = params.delta_tilde();
  if (std::abs(std::cos(dtt)) < 1e-12)
    throw std::domain_error("mapping_B_of_K: tan(delta~) undefined");
  const double t = std::tan(dtt);
  const Complex x =
      (t * t / 4.0) * (2.0 + std::exp(kI * K) + std::exp(-kI * K));
  const Complex f = 0.5 / std::sqrt(1.0 + x);
  Matrix4 b = Matrix4::Identity();
  b(1, 1) = 2.0 * f;
  b(1, 2) = f * t * (1.0 + std::exp(-kI * K));
  b(2, 1) = -f * t * (1.0 + std::exp(kI * K));
  b(2, 2) = 2.0 * f;
  return {K, b};
}

FourierBlock4 mapping_B_of_K_eigenroute(double K, const WalkParams& params) {
  const Matrix4 u = fourier_block_even_odd(K, params).matrix;
  const Matrix4 w = fourier_block_naive(K, params).matrix;
  auto eig = [](const Matrix4& mat) {
    Eigen::ComplexEigenSolver<Matrix4> es(mat);
    std::array<int, 4> order{0, 1, 2, 3};
    const auto& vals = es.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      const double ai = std::arg(vals(i)), aj = std::arg(vals(j));
      if (std::abs(ai - aj) > 1e-9) return ai < aj;
      return vals(i).real() < vals(j).real();
    });
    Matrix4 vecs;
    for (int c = 0; c < 4; ++c) {
      Eigen::Vector4cd v = es.eigenvectors().col(order[c]);
      for (int rr = 0; rr < 4; ++rr) {
        if (std::abs(v(rr)) > 1e-9) {
          v *= std::conj(v(rr)) / std::abs(v(rr));
          break;
        }
      }
      vecs.col(c) = v;
    }
    return vecs;
  };
  const Matrix4 p = eig(u);
  const Matrix4 q = eig(w);
  return {K, Matrix4(q * p.inverse())};
}

MappingCoefficients mapping_real_space_coefficients(const WalkParams& params,
                                                    int max_offset,
                                                    int quadrature_points) {
  if (quadrature_points < 8 * max_offset)
    throw std::invalid_argument(
        "mapping_real_space_coefficients: need quadrature_points >= "
        "8*max_offset");
  MappingCoefficients out;
  out.quadrature_points = quadrature_points;
  for (int off = -max_offset; off <= max_offset; ++off)
    out.entries[off] = Matrix4::Zero();
  for (int qd = 0; qd < quadrature_points; ++qd) {
    const double K = -kPi + 2.0 * kPi * qd / quadrature_points;
    const Matrix4 b = mapping_B_of_K(K, params).matrix;
    for (auto& [off, acc] : out.entries)
      acc += b * std::exp(kI * K * double(off));
  }
  for (auto& [off, acc] : out.entries) acc /= double(quadrature_points);
  return out;
}

WalkOperator even_odd_coin_decomposition(const WalkParams& params) {
  params.validate();
  const int n = params.n_sites;
  const int m = n / 2;
  const int d = 2 * n;
  const double th = params.theta_tilde();

  // Cell layout: 4 components per two-site cell l; 0,1 = even, 2,3 = odd.
  Matrix slk = Matrix::Zero(d, d);  // e^{iK} on the even pair
  Matrix srk = Matrix::Zero(d, d);  // e^{-iK} on the odd pair
  for (int l = 0; l < m; ++l) {
    for (int u = 0; u < 4; ++u) {
      if (u < 2) {
        slk(4 * l + u, 4 * wrap(l + 1, m) + u) = 1.0;
        srk(4 * l + u, 4 * l + u) = 1.0;
      } else {
        slk(4 * l + u, 4 * l + u) = 1.0;
        srk(4 * l + u, 4 * wrap(l - 1, m) + u) = 1.0;
      }
    }
  }

  auto cellcoin = [&](double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    Matrix u = Matrix::Zero(d, d);
    for (int l = 0; l < m; ++l) {
      u.block<2, 2>(4 * l, 4 * l) = c * Matrix2::Identity();
      u.block<2, 2>(4 * l, 4 * l + 2) = -s * Matrix2::Identity();
      u.block<2, 2>(4 * l + 2, 4 * l) = s * Matrix2::Identity();
      u.block<2, 2>(4 * l + 2, 4 * l + 2) = c * Matrix2::Identity();
    }
    return u;
  };

  Matrix v = Matrix::Zero(d, d);
  const Matrix2 rho = basis2x2::rho();
  for (int l = 0; l < m; ++l) {
    v.block<2, 2>(4 * l, 4 * l) = rho;
    v.block<2, 2>(4 * l + 2, 4 * l + 2) = rho.adjoint();
  }

  WalkOperator w;
  w.factors.push_back({"V", v});
  w.factors.push_back({"C(-theta~) [EO]", cellcoin(-th)});
  w.factors.push_back({"S^R_K", srk});
  w.factors.push_back({"C(theta~) [EO]", cellcoin(th)});
  w.factors.push_back({"S^L_K", slk});
  w.factors.push_back({"V^dag", v.adjoint()});
  w.op = {w.product(), Basis::LRPosition, params};
  return w;
}

}  // namespace lgtwalk

#pragma once

#include <random>

#include "lgtwalk/types.hpp"

namespace lgtwalk::test {

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

inline double hermiticity_defect(const Matrix& h) {
  return max_abs(h - Matrix(h.adjoint()));
}

inline Vector random_state(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v / v.norm();
}

}  // namespace lgtwalk::test

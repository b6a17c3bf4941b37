#pragma once

#include <map>

#include "lgtwalk/digitize.hpp"
#include "lgtwalk/types.hpp"

namespace lgtwalk {

using Matrix4 = Eigen::Matrix4cd;

struct FourierBlock4 {
  double K = 0.0;
  Matrix4 matrix;
};

// Real-space expansion coefficients b_{N'} of the Fourier-space mapping.
struct MappingCoefficients {
  std::map<int, Matrix4> entries;
  int quadrature_points = 0;
};

// Strauch operator S~ K(theta) S~ K(theta) with S~ = S^{-1}.
WalkOperator strauch_operator(double theta, const WalkParams& params);

// Analytic 4x4 Fourier blocks of the even-odd step and of the two-substep
// walk, over the two-site Brillouin grid.
FourierBlock4 fourier_block_even_odd(double K, const WalkParams& params);
FourierBlock4 fourier_block_naive(double K, const WalkParams& params);

// Extracts the 4x4 K-block of an operator invariant under two-site
// translations (used as an independent cross-check).
Matrix4 extract_fourier_block(const Matrix& op, int n_sites, double K);

// Closed-form mapping conjugating the even-odd block into the walk block.
FourierBlock4 mapping_B_of_K(double K, const WalkParams& params);

// Eigenvector-based construction of the same mapping, phase-fixed by making
// the first nonzero eigenvector component real-positive.
FourierBlock4 mapping_B_of_K_eigenroute(double K, const WalkParams& params);

// Trapezoid quadrature of the inverse Fourier transform of B(K).
MappingCoefficients mapping_real_space_coefficients(const WalkParams& params,
                                                    int max_offset,
                                                    int quadrature_points);

// Even-odd coin-basis product V C(-theta~) S^R_K C(theta~) S^L_K V^dag.
WalkOperator even_odd_coin_decomposition(const WalkParams& params);

}  // namespace lgtwalk

#pragma once

#include <string>
#include <vector>

#include "lgtwalk/types.hpp"

namespace lgtwalk {

struct WalkFactor {
  std::string label;
  Matrix mat;
};

// Unitary one-step evolution with its recorded factorization.
struct WalkOperator {
  LatticeOperator op;
  std::vector<WalkFactor> factors;

  // Product of the recorded factors, leftmost factor applied last.
  Matrix product() const;
};

// Shift and coin primitives on the interleaved LR basis.
Matrix shift_up(int n_sites);            // e^{ik}: psi_p <- psi_{p+1}
Matrix shift_SL(int n_sites);            // diag(e^{ik}, 1)
Matrix shift_SR(int n_sites);            // diag(1, e^{-ik})
Matrix shift_S(int n_sites);             // SL * SR
Matrix coin_C(int n_sites, double theta);       // exp(-i sigma2 theta/2)
Matrix coin_Cbreve(int n_sites, double theta);  // exp(-i sigma1 theta/2)
Matrix coin_K(int n_sites, double theta);       // i * Cbreve
// Rotation blocks [[c,-s],[s,c]] on staggered pairs (start+2q, start+2q+1).
Matrix rotation_pairs(int n_sites, double angle, int start);

WalkOperator build_U_mass(const WalkParams& params);
WalkOperator build_U_on(const WalkParams& params);
WalkOperator build_U_int(const WalkParams& params);
WalkOperator build_U_transport(const WalkParams& params);
// Coined form C(-theta) S^R C(theta) S^L of the transport step.
WalkOperator build_dtqw_compact(const WalkParams& params);
// Two-substep walk digitizing the naive transport:
// S^R C(-theta~) S C(theta~) S (S^R)^{-1}.
WalkOperator build_naive_dtqw(const WalkParams& params);
// G-conjugated walk digitizing the nearest-neighbor Wilson term.
WalkOperator build_wilson_dtqw(const WalkParams& params);
// Even-odd Trotter step of the naive transport (analytic pair blocks).
WalkOperator build_even_odd(const WalkParams& params);
// S^R C(-theta1) S C(theta2) S (S^R)^{-1}; theta1 is the outer (second) coin.
WalkOperator build_two_angle_walk(double theta1, double theta2,
                                  const WalkParams& params);

}  // namespace lgtwalk

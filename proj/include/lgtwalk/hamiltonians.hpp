#pragma once

#include <utility>

#include "lgtwalk/types.hpp"

namespace lgtwalk {

// Continuous-time lattice Hamiltonians (Hermitian LatticeOperators).

// Left-right transport plus sigma3 mass term, LR basis.
LatticeOperator build_left_right(const WalkParams& params);
// Transport part only (m = 0).
LatticeOperator build_left_right_transport(const WalkParams& params);

// Symmetric-difference transport (sigma1 hops, weight -i/2a) plus -sigma2 mass.
LatticeOperator build_naive(const WalkParams& params);

// Naive Hamiltonian plus the Wilson term r/(2a) (2 diag - hops) on sigma3.
LatticeOperator build_wilson(const WalkParams& params);

// Scalar Hamiltonian on the 2N-site staggered lattice: hops -i/(2a'),
// a' = a/2, and alternating mass m(-1)^n.
LatticeOperator build_staggered(const WalkParams& params);

// Splits the left-right transport into on-site and inter-site parts
// (H^on blocks sigma2/a on sites, H^int the same shifted one staggered site).
// Rejects inputs that are not the left-right transport matrix.
std::pair<LatticeOperator, LatticeOperator> split_on_inter(
    const LatticeOperator& h_transport);

}  // namespace lgtwalk

#pragma once

#include "lgtwalk/types.hpp"

namespace lgtwalk {

// Constant 2x2 matrices shared by the operator builders.
namespace basis2x2 {

Matrix2 sigma1();
Matrix2 sigma2();
Matrix2 sigma3();
Matrix2 sigma_plus();   // (sigma1 + i sigma2) / 2
Matrix2 alpha0();       // sigma3
Matrix2 alpha1();       // sigma1
Matrix2 gamma5();       // sigma1
Matrix2 B();            // exp(-i sigma1 pi/4)
Matrix2 G();            // exp(+i sigma2 pi/4)
Matrix2 P();            // passage matrix [[0, e^{i pi/4}], [-e^{-i pi/4}, 0]]
Matrix2 rho();          // normalized square root of sigma1

}  // namespace basis2x2

// Index of component c (0 = L, 1 = R) of spinor site p.
inline int lr_index(int p, int c) { return 2 * p + c; }
// Staggered-lattice index housing the same amplitude (Lp -> 2p, Rp -> 2p+1).
inline int staggered_index(int p, int c) { return 2 * p + c; }

StaggeredField stagger(const SpinorField& field);
SpinorField unstagger(const StaggeredField& field);

// Conjugates by the interleaving permutation between the two position bases.
LatticeOperator change_operator_basis(const LatticeOperator& op, Basis target);

// Block-diagonal N-fold copy of a 2x2 matrix.
Matrix per_site(int n_sites, const Matrix2& blk);

}  // namespace lgtwalk

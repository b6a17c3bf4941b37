#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lgtwalk/digitize.hpp"
#include "lgtwalk/types.hpp"

namespace lgtwalk {

struct ConvergenceReport {
  std::string swept;              // "dt" or "a"
  std::vector<double> values;
  std::vector<double> errors;    // spectral-norm errors
  double fitted_order = 0.0;     // log-log least-squares slope
  double fit_residual = 0.0;
};

struct LightConeReport {
  std::string label;
  int radius_per_step = 1;
  std::vector<double> outside_mass;  // per step
};

// Independent matrix-exponential oracle (Pade scaling-and-squaring).
Matrix expm(const Matrix& m);

// Fits log(error) against log(value) by least squares.
ConvergenceReport fit_order(const std::string& swept,
                            const std::vector<double>& values,
                            const std::vector<double>& errors);

// Per-step error ||U(dt) - exp(-i dt H(dt))||_2 over a decreasing dt grid,
// plus the fixed-horizon variant (t = steps * dt held constant).
ConvergenceReport continuum_time_limit(
    const std::function<Matrix(const WalkParams&)>& walk_builder,
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    WalkParams base, const std::vector<double>& dt_grid);
ConvergenceReport continuum_time_limit_horizon(
    const std::function<Matrix(const WalkParams&)>& walk_builder,
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    WalkParams base, const std::vector<double>& dt_grid, double horizon);

// Error of the exact lattice-Hamiltonian evolution of a plane wave against
// the continuum evolution generated by the scheme's 2x2 continuum block,
// over an a-grid at fixed physical box size and horizon.
ConvergenceReport continuum_space_limit(
    const std::function<Matrix(const WalkParams&)>& hamiltonian,
    const std::function<Matrix2(double k, double m)>& continuum_block,
    WalkParams base, const std::vector<double>& a_grid, int k_mode);

// Probability mass outside |p - p0| <= R * j per step.
LightConeReport light_cone_scan(const Matrix& step, const WalkParams& params,
                                int radius_per_step, int steps, int peak_site,
                                const std::string& label);

enum class SymmetryKind { T1Staggered, T2Staggered, Gamma5 };

// Max-norm of the commutator with the chosen symmetry operation.
double symmetry_witness(const LatticeOperator& op, SymmetryKind symmetry);

// Max distance between sorted spectra; phase-sorted for unitaries,
// value-sorted for Hermitian inputs.
double spectral_compare(const Matrix& op_a, const Matrix& op_b, bool unitary);

// Number of eigenvalues of a Hermitian operator below the threshold in
// absolute value.
int zero_mode_count(const Matrix& h, double threshold = 1e-8);

// Momentum zeros of a massless Dirac Hamiltonian; each contributes a
// two-fold (branch) eigenvalue degeneracy at zero.
int doubling_count(const Matrix& h, double threshold = 1e-8);

// Staggered-basis translation by `sites` staggered sites.
Matrix staggered_translation(int dim, int sites);

}  // namespace lgtwalk

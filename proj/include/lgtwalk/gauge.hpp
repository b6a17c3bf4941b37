#pragma once

#include <utility>

#include "lgtwalk/digitize.hpp"
#include "lgtwalk/types.hpp"

namespace lgtwalk {

// U(1) potentials on a spacetime window of j_max steps over n_sites sites.
// a0 has j_max rows; a1 has j_max + 1 rows because the spatial link phase of
// step j reads slice j + 1.
struct GaugeConfig {
  Eigen::MatrixXd a0;
  Eigen::MatrixXd a1;
  double q = 1.0;

  int j_max() const { return static_cast<int>(a0.rows()); }
  int n_sites() const { return static_cast<int>(a0.cols()); }
  void validate() const;

  // Per-step phases alpha_{j,p} = dt q A0_{j,p}, vartheta_{j,p} = -a q A1_{j+1,p}.
  Eigen::VectorXd alpha(const WalkParams& params, int j) const;
  Eigen::VectorXd vartheta(const WalkParams& params, int j) const;
};

struct GaugeTransform {
  Eigen::MatrixXd phi;  // j_max + 1 rows: needs the slice j + 1
};

// Gauged coin: [[e^{i vth_p} cos th/2, -sin th/2], [sin th/2, e^{-i vth_p} cos th/2]].
Matrix coin_gauged(int n_sites, double theta, const Eigen::VectorXd& vartheta);
// Phase-decorated shifts diag(e^{i vth}, 1) and diag(1, e^{-i vth}).
Matrix shift_SL_phase(int n_sites, const Eigen::VectorXd& vartheta);
Matrix shift_SR_phase(int n_sites, const Eigen::VectorXd& vartheta);

// e^{-i alpha} C(-theta) S^R S^R_vth C(theta) S^L_vth S^L at step j.
WalkOperator build_gauged_leftright_step(const WalkParams& params,
                                         const GaugeConfig& gauge, int j);
// e^{-i alpha} S^R C^g(-theta~, vth) S C^g(theta~, vth) S (S^R)^{-1}.
WalkOperator build_gauged_naive_step(const WalkParams& params,
                                     const GaugeConfig& gauge, int j);

// Continuous-time generators the gauged steps converge to (static slice j).
LatticeOperator build_gauged_leftright_hamiltonian(const WalkParams& params,
                                                   const GaugeConfig& gauge,
                                                   int j);
LatticeOperator build_gauged_naive_hamiltonian(const WalkParams& params,
                                               const GaugeConfig& gauge,
                                               int j);

// Phase-rotates the state by e^{i q phi_{j,p}} and shifts the potentials;
// the A1 slice consumed by step j transforms with the phi slice j.
std::pair<SpinorField, GaugeConfig> apply_gauge_transform(
    const SpinorField& state, const GaugeConfig& gauge,
    const GaugeTransform& transform, int j);

// Plaquette-exact lattice field strength; gauge invariant and equal to the
// electric field for A1 linear in time.
double field_strength_F01(const GaugeConfig& gauge, const WalkParams& params,
                          int j, int p);

Complex plaquette_U01(const GaugeConfig& gauge, const WalkParams& params,
                      int j, int p);

// Integer pattern M by which F01 changes (in units of 2 pi / (q a dt)) under
// the large shift A^mu += 2 pi w^mu / (q Delta^mu); the shift is admissible
// at (j, p) when M != 0.
int large_shift_pattern(const Eigen::MatrixXi& w0, const Eigen::MatrixXi& w1,
                        int j, int p);
GaugeConfig apply_large_shift(const GaugeConfig& gauge,
                              const WalkParams& params,
                              const Eigen::MatrixXi& w0,
                              const Eigen::MatrixXi& w1);

}  // namespace lgtwalk

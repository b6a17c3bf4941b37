#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace lgtwalk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kPi = std::numbers::pi;

// Lattice spacing a, time step dt, mass m, Wilson parameter r, site count N,
// plus the derived coin angles used by the discrete-time schemes.
struct WalkParams {
  double a = 1.0;
  double dt = 0.5;
  double m = 0.0;
  double r = 1.0;
  int n_sites = 8;

  void validate() const {
    if (a <= 0.0) throw std::invalid_argument("WalkParams: a must be > 0");
    if (dt < 0.0) throw std::invalid_argument("WalkParams: dt must be >= 0");
    if (n_sites < 4 || n_sites % 2 != 0)
      throw std::invalid_argument("WalkParams: n_sites must be even and >= 4");
  }

  int dim() const { return 2 * n_sites; }
  double delta() const { return dt / a; }
  double theta() const { return kPi - 2.0 * delta(); }
  double delta_tilde() const { return 0.5 * delta(); }
  double theta_tilde() const { return kPi - 2.0 * delta_tilde(); }
  double delta_tilde_r() const { return r * delta_tilde(); }
  double theta_tilde_r() const { return kPi - 2.0 * delta_tilde_r(); }
};

enum class Basis { LRPosition, StaggeredPosition };

// Two-component spinor on N sites; component c of site p lives at index 2p+c
// (c = 0 for L, c = 1 for R).
struct SpinorField {
  Vector amps;
  WalkParams params;

  double norm() const { return amps.norm(); }
};

// Scalar wavefunction on the 2N-site staggered lattice.
struct StaggeredField {
  Vector amps;
  WalkParams params;

  double norm() const { return amps.norm(); }
};

// Dense complex operator over a declared basis.
struct LatticeOperator {
  Matrix mat;
  Basis basis = Basis::LRPosition;
  WalkParams params;
};

}  // namespace lgtwalk

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "ll/algebra.hpp"
#include "ll/params.hpp"

// Free-particle and piecewise-constant-potential solutions of the 2x2
// equation -i d_z psi = (i eta d_t + eta^dag m) psi:
//   * momentum eigenmodes with p = +/- sqrt(2 E m),
//   * probability current J = psi^dag (eta + eta^dag) psi and density
//     rho = psi^dag eta^dag eta psi,
//   * non-relativistic reduction of the (2+1)D Dirac equation,
//   * step and barrier scattering (psi-continuity only; the equation is
//     first order, so no derivative matching is imposed).

namespace ll {

struct PlaneWaveMode {
  double E = 0.0;
  double p = 0.0;             // units of m
  Eigen::Vector2cd spinor;    // lower component normalized to 1
  int direction = +1;         // sign of p
};

struct ScatteringResult {
  double R = 0.0;
  double T = 0.0;
  std::complex<double> r_amp{0.0, 0.0};
  std::complex<double> t_amp{0.0, 0.0};
};

// Two propagating modes with spinors (+/- sqrt(E/m), 1) and p = +/- sqrt(2Em).
// E < 0 is evanescent territory and throws EvanescentModeError.
std::pair<PlaneWaveMode, PlaneWaveMode> momentum_modes(double E, double m);

// (J, rho) for a 2-component state; both are real bilinears.
std::pair<double, double> current_density(const Eigen::Vector2cd& psi, const MatrixSet& set);

// Build the exact (2+1)D Dirac mode at E = m + Eprime (momentum direction
// (px, py); if both are zero, |p| = sqrt(E^2 - m^2) is taken along x),
// rescale it, and return the residual norm of mu_i p_i phi = (eta E' +
// eta^dag m) phi. Exactly E'/sqrt(2), i.e. linear in E'.
double nr_reduction_residual(double Eprime, double m, double px = 0.0, double py = 0.0);

// m = 0 branch: residual of the massless Dirac mode with E = |p|; exact zero.
double massless_dirac_residual(double px, double py);

// Step potential V(z) = V0 * theta(z). Wavenumbers k = sqrt(2(E-V)m);
// evanescent transmitted branch p = i sqrt(2(V0-E)m) for E < V0.
ScatteringResult solve_step(double E, double V0, double m);

// Rectangular barrier of height V0 on [0, width]; full 4-unknown matching.
ScatteringResult solve_barrier(double E, double V0, double width, double m);

} // namespace ll

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ll/params.hpp"
#include "ll/radial_function.hpp"

// Analytic Coulomb bound-state machinery: series constants, indicial
// exponent, the coupled recursion chain for the F/G coefficients,
// termination/quantization, closed-form energies, ground-state spinors and
// normalization. Conventions: a0 = 1 fixes the overall scale; natural units
// with m as the energy unit and a_B = 1/(alpha m) as the length scale.

namespace ll {

struct SeriesConstants {
  double p1 = 0.0; // a  (E + m) / sqrt(2)
  double p2 = 0.0; // a  Z alpha / sqrt(2)
  double q1 = 0.0; // a' (E - m) / sqrt(2)
  double q2 = 0.0; // a' Z alpha / sqrt(2)
  double lambda = 0.0; // +sqrt(q1^2 - p1^2), requires a bound state
  double s = 0.0;      // +sqrt(kappa^2 + q2^2 - p2^2)
};

// Throws NotBoundStateError when q1^2 <= p1^2, SupercriticalCouplingError
// when the indicial radicand is non-positive.
SeriesConstants series_constants(double E, const PhysParams& params, int kappa);

// Positive root of the n = -1 indicial equation (normalizability).
double indicial_exponent(int kappa, const SeriesConstants& constants);

struct RadialSolution {
  QuantumNumbers quantum;
  double E = 0.0;
  SeriesConstants constants;
  std::vector<double> a_coeffs; // length n' + 1, a0 = 1
  std::vector<double> b_coeffs;
};

// Runs the coupled recursion chain from the indicial start to n' and checks
// the termination ratio b_{n'} / a_{n'} = (lambda - q1)/p1. The energy must
// already satisfy the quantization condition (use solve_energy_finite_eps or
// energy_closed_form first).
RadialSolution run_recursions(double E, const QuantumNumbers& quantum, const PhysParams& params);

// E = -m Z^2 alpha^2 / (2 n^2).
double energy_closed_form(int n, const PhysParams& params);

// Root of the combined termination relation at finite eps; converges to the
// closed form with an O(eps) error as eps -> 0. eps = 0 short-circuits to the
// closed form (the relation then factorizes analytically).
double solve_energy_finite_eps(int nprime, int kappa, const PhysParams& params);

// Value of the combined n'-1 termination relation at energy E (the function
// whose root solve_energy_finite_eps brackets); exposed for diagnostics.
double quantization_defect(double E, int nprime, int kappa, const PhysParams& params);

enum class Spin { up, down };

struct GroundStateWavefunction {
  PhysParams params;
  Spin spin = Spin::up;
  double d0 = 0.0;        // a0 / b0 = (2 - sqrt2 Z alpha)/(2 + sqrt2 Z alpha)
  double lambda = 0.0;    // decay rate Z / a_B = m Z alpha
  double N_computed = 0.0; // normalization fixed by int |psi|^2 d^3 r = 1
  double N_formula = 0.0;  // the closed-form N: 2 sqrt(pi) (Z/a_B)^{3/2} (2+sqrt2 Za)/sqrt(2+Z^2 a^2)
  double ratio_formula_over_computed = 0.0;

  // four-component value at (r, theta, phi), using N_computed:
  // spin up:   N/sqrt(4pi) (1, 0, -i d0 cos t, -i d0 sin t e^{+i p}) e^{-lam r}
  // spin down: N/sqrt(4pi) (0, 1, -i d0 sin t e^{-i p}, +i d0 cos t) e^{-lam r}
  Eigen::Vector4cd value(double r, double theta, double phi) const;
};

GroundStateWavefunction ground_state(const PhysParams& params, Spin spin);

// f(r) = e^{-lam r} r^{s-1} sum a_n r^n and g(r) likewise with b_n
// (F = r f, G = r g).
std::pair<RadialFunction, RadialFunction> radial_functions(const RadialSolution& solution);

} // namespace ll

#include "ll/coulomb.hpp"

#include <cmath>

namespace ll {

namespace {
const double SQ2 = std::sqrt(2.0);
const std::complex<double> I1(0.0, 1.0);
} // namespace

SeriesConstants series_constants(double E, const PhysParams& params, int kappa) {
  params.validate();
  if (kappa < 1) throw std::invalid_argument("series_constants: kappa must be >= 1");
  const double m = params.m;
  const double a = params.a();
  const double ap = params.a_prime();
  const double Za = params.Za();

  SeriesConstants c;
  c.p1 = a * (E + m) / SQ2;
  c.p2 = a * Za / SQ2;
  c.q1 = ap * (E - m) / SQ2;
  c.q2 = ap * Za / SQ2;

  // factored form of q1^2 - p1^2: the direct difference of squares cancels
  // catastrophically at |E| << m
  const double lam2 = -2.0 * (m + params.eps * E) * (E + params.eps * m);
  if (lam2 <= 0.0)
    throw NotBoundStateError("series_constants: q1^2 <= p1^2 (E not in the bound regime)");
  c.lambda = std::sqrt(lam2);

  const double s2 = kappa * kappa + c.q2 * c.q2 - c.p2 * c.p2;
  if (s2 <= 0.0)
    throw SupercriticalCouplingError("series_constants: kappa^2 + q2^2 - p2^2 <= 0");
  c.s = std::sqrt(s2);
  return c;
}

double indicial_exponent(int kappa, const SeriesConstants& constants) {
  const double s2 =
      kappa * kappa + constants.q2 * constants.q2 - constants.p2 * constants.p2;
  if (s2 <= 0.0)
    throw SupercriticalCouplingError("indicial_exponent: non-positive radicand");
  return std::sqrt(s2);
}

RadialSolution run_recursions(double E, const QuantumNumbers& quantum,
                              const PhysParams& params) {
  quantum.validate();
  RadialSolution sol;
  sol.quantum = quantum;
  sol.E = E;
  sol.constants = series_constants(E, params, quantum.kappa);
  const SeriesConstants& c = sol.constants;
  const double kap = quantum.kappa;

  // n = -1 (indicial) level: a_{-1} = b_{-1} = 0 fixes b0/a0; a0 = 1 sets the
  // scale. Both indicial relations give the same ratio because
  // s^2 = kappa^2 + q2^2 - p2^2.
  sol.a_coeffs = {1.0};
  sol.b_coeffs = {(c.q2 + c.s) / (kap - c.p2)};

  for (int n = 0; n < quantum.nprime; ++n) {
    const double an = sol.a_coeffs[n];
    const double bn = sol.b_coeffs[n];
    // coefficient matrix of (a_{n+1}, b_{n+1}) from the two recursions
    const double m00 = c.q2 + c.s + n + 1, m01 = c.p2 - kap;
    const double m10 = -kap - c.p2, m11 = c.s + n + 1 - c.q2;
    const double r0 = (c.lambda - c.q1) * an - c.p1 * bn;
    const double r1 = c.p1 * an + (c.q1 + c.lambda) * bn;
    const double det = m00 * m11 - m01 * m10;
    if (std::abs(det) < 1e-14 * (std::abs(m00 * m11) + std::abs(m01 * m10) + 1.0))
      throw DegenerateRecursionError("run_recursions: singular step system");
    sol.a_coeffs.push_back((r0 * m11 - m01 * r1) / det);
    sol.b_coeffs.push_back((m00 * r1 - r0 * m10) / det);
  }

  const double ratio = (c.lambda - c.q1) / c.p1;
  const double anp = sol.a_coeffs.back();
  const double bnp = sol.b_coeffs.back();
  const double scale = std::max({std::abs(anp), std::abs(bnp), 1e-300});
  if (std::abs(bnp - ratio * anp) > 1e-8 * scale)
    throw InconsistentEnergyError(
        "run_recursions: termination ratio violated (E is not a quantized level)");
  return sol;
}

double energy_closed_form(int n, const PhysParams& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("energy_closed_form: n must be >= 1");
  const double Za = params.Za();
  return -params.m * Za * Za / (2.0 * n * n);
}

double quantization_defect(double E, int nprime, int kappa, const PhysParams& params) {
  const SeriesConstants c = series_constants(E, params, kappa);
  const double av = 1.0;
  const double bv = (c.lambda - c.q1) / c.p1; // termination ratio
  return c.p1 * ((c.q2 + nprime + c.s) * av + (c.p2 - kappa) * bv) +
         (c.q1 - c.lambda) * (-(c.p2 + kappa) * av + (-c.q2 + nprime + c.s) * bv);
}

double solve_energy_finite_eps(int nprime, int kappa, const PhysParams& params) {
  params.validate();
  if (nprime < 0 || kappa < 1)
    throw std::invalid_argument("solve_energy_finite_eps: need n' >= 0 and kappa >= 1");
  const int n = nprime + kappa;
  const double E0 = energy_closed_form(n, params);
  if (params.eps == 0.0) return E0; // the relation factorizes analytically at eps = 0

  const double m = params.m;
  const double eps = params.eps;
  // The finite-eps root sits near E0 - m*eps (the regulator shifts the whole
  // spectrum by -m*eps to leading order); bracket between midpoints toward the
  // neighboring levels, capped away from the lambda-validity edge E = -eps*m.
  const double target = E0 - m * eps;
  const double E_prev = (n > 1) ? energy_closed_form(n - 1, params) : 2.0 * E0;
  const double E_next = energy_closed_form(n + 1, params);
  double lo = target - 0.4 * (E0 - E_prev);
  double hi = std::min(target + 0.4 * (E_next - E0), -1.05 * eps * m);
  if (!(lo < hi))
    throw RootNotBracketedError("solve_energy_finite_eps: level destroyed by the regulator "
                                "(bracket collapsed)");
  double flo = quantization_defect(lo, nprime, kappa, params);
  double fhi = quantization_defect(hi, nprime, kappa, params);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw RootNotBracketedError("solve_energy_finite_eps: no sign change in bracket");

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = quantization_defect(mid, nprime, kappa, params);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Eigen::Vector4cd GroundStateWavefunction::value(double r, double theta, double phi) const {
  const double radial = N_computed / std::sqrt(4.0 * M_PI) * std::exp(-lambda * r);
  const std::complex<double> eip = std::exp(I1 * phi);
  Eigen::Vector4cd v;
  if (spin == Spin::up)
    v << 1.0, 0.0, -I1 * d0 * std::cos(theta), -I1 * d0 * std::sin(theta) * eip;
  else
    v << 0.0, 1.0, -I1 * d0 * std::sin(theta) / eip, I1 * d0 * std::cos(theta);
  return radial * v;
}

GroundStateWavefunction ground_state(const PhysParams& params, Spin spin) {
  params.validate();
  GroundStateWavefunction w;
  w.params = params;
  w.spin = spin;
  const double Za = params.Za();
  w.d0 = (2.0 - SQ2 * Za) / (2.0 + SQ2 * Za);
  w.lambda = params.m * Za; // Z / a_B
  const double zab = std::pow(w.lambda, 1.5); // (Z/a_B)^{3/2}
  // int |psi|^2 d^3 r = 1 with the 1/sqrt(4 pi) angular factor included
  w.N_computed = zab * (2.0 + SQ2 * Za) / std::sqrt(2.0 + Za * Za);
  w.N_formula = 2.0 * std::sqrt(M_PI) * zab * (2.0 + SQ2 * Za) / std::sqrt(2.0 + Za * Za);
  w.ratio_formula_over_computed = w.N_formula / w.N_computed;
  return w;
}

std::pair<RadialFunction, RadialFunction> radial_functions(const RadialSolution& solution) {
  const double base = solution.constants.s - 1.0;
  const double lam = solution.constants.lambda;
  RadialFunction f(base, lam, solution.a_coeffs);
  RadialFunction g(base, lam, solution.b_coeffs);
  return {f, g};
}

} // namespace ll

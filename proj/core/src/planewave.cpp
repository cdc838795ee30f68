#include "ll/planewave.hpp"

#include <cmath>

namespace ll {

namespace {
const std::complex<double> I1(0.0, 1.0);
const double SQ2 = std::sqrt(2.0);
} // namespace

std::pair<PlaneWaveMode, PlaneWaveMode> momentum_modes(double E, double m) {
  if (m <= 0.0) throw std::invalid_argument("momentum_modes: m must be positive");
  if (E < 0.0)
    throw EvanescentModeError("momentum_modes: E < 0 is evanescent; use the scattering solvers");
  const double p = std::sqrt(2.0 * E * m);
  const double x = std::sqrt(E / m);
  PlaneWaveMode plus{E, p, (Eigen::Vector2cd() << x, 1.0).finished(), +1};
  PlaneWaveMode minus{E, -p, (Eigen::Vector2cd() << -x, 1.0).finished(), -1};
  return {plus, minus};
}

std::pair<double, double> current_density(const Eigen::Vector2cd& psi, const MatrixSet& set) {
  if (set.dim != 2) throw std::invalid_argument("current_density: needs the dim-2 matrix set");
  const std::complex<double> J = psi.dot((set.eta + set.eta_dag) * psi);
  const std::complex<double> rho = psi.dot(set.eta_dag * set.eta * psi);
  return {J.real(), rho.real()};
}

double nr_reduction_residual(double Eprime, double m, double px, double py) {
  if (Eprime <= -m) throw std::invalid_argument("nr_reduction_residual: need E' > -m");
  const double E = m + Eprime;
  const double pmag = std::sqrt(std::max(E * E - m * m, 0.0));
  double dir = std::hypot(px, py);
  std::complex<double> pc;
  if (dir == 0.0) {
    pc = pmag; // momentum along x by default
  } else {
    pc = std::complex<double>(px, py) * (pmag / dir);
  }
  if (pmag == 0.0) return 0.0; // limit point E' = 0

  // Exact (2+1)D Dirac mode for mu_i p_i psi = (sigma1 E + i sigma2 m) psi
  // with mu1 = I, mu2 = i sigma3: upper component x_D = (E+m)/(p1 + i p2).
  const std::complex<double> xD = (E + m) / pc;
  Eigen::Vector2cd phi;
  phi << xD / SQ2, 1.0; // rescaled spinor fed into the non-relativistic form

  // mu_i p_i is diagonal: diag(p1 + i p2, p1 - i p2).
  Eigen::Vector2cd lhs;
  lhs << pc * phi(0), std::conj(pc) * phi(1);
  // eta E' + eta^dag m = [[0, sqrt(2) m], [sqrt(2) E', 0]]
  Eigen::Vector2cd rhs;
  rhs << SQ2 * m * phi(1), SQ2 * Eprime * phi(0);
  return (lhs - rhs).norm();
}

double massless_dirac_residual(double px, double py) {
  const double E = std::hypot(px, py);
  if (E == 0.0) return 0.0;
  const std::complex<double> pc(px, py);
  Eigen::Vector2cd psi;
  psi << E / pc, 1.0;
  // (mu_i p_i - sigma1 E) psi with m = 0
  Eigen::Vector2cd res;
  res << pc * psi(0) - E * psi(1), std::conj(pc) * psi(1) - E * psi(0);
  return res.norm();
}

namespace {
// Upper spinor component of the mode with (possibly complex) momentum q at
// mass m: psi = (q / sqrt(2 m), 1)^T, consistent with (sqrt(E/m), 1) on the
// propagating branch.
std::complex<double> upper(std::complex<double> q, double m) { return q / (SQ2 * m); }
} // namespace

ScatteringResult solve_step(double E, double V0, double m) {
  if (E <= 0.0) throw std::invalid_argument("solve_step: E must be positive");
  if (m <= 0.0) throw std::invalid_argument("solve_step: m must be positive");
  const double k1 = std::sqrt(2.0 * E * m);
  std::complex<double> k2;
  if (E > V0)
    k2 = std::sqrt(2.0 * (E - V0) * m);
  else
    k2 = I1 * std::sqrt(2.0 * (V0 - E) * m); // decaying evanescent branch

  ScatteringResult out;
  // psi-continuity of both components at z = 0:
  //   upper: k1 (1 - r) = k2 t,  lower: 1 + r = t
  out.r_amp = (k1 - k2) / (k1 + k2);
  out.t_amp = 1.0 + out.r_amp;
  out.R = std::norm(out.r_amp);
  // transmitted/incident current ratio; Re(k2) = 0 kills T below the step
  out.T = std::norm(out.t_amp) * k2.real() / k1;
  return out;
}

ScatteringResult solve_barrier(double E, double V0, double width, double m) {
  if (E <= 0.0) throw std::invalid_argument("solve_barrier: E must be positive");
  if (width <= 0.0) throw std::invalid_argument("solve_barrier: width must be positive");
  if (m <= 0.0) throw std::invalid_argument("solve_barrier: m must be positive");
  const double k1 = std::sqrt(2.0 * E * m);
  std::complex<double> k2;
  if (E > V0)
    k2 = std::sqrt(2.0 * (E - V0) * m);
  else
    k2 = I1 * std::sqrt(2.0 * (V0 - E) * m);

  // Unknowns (r, A, B, t') with interior e^{+i k2 z}, e^{-i k2 z} and
  // t' = t e^{i k1 w}; two-component continuity at z = 0 and z = w.
  const std::complex<double> ep = std::exp(I1 * k2 * width);
  const std::complex<double> em = std::exp(-I1 * k2 * width);
  Eigen::Matrix4cd M = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();
  // upper at 0:  -(-k1) r - k2 A + k2 B = k1  ->  k1 r + k2 A - k2 B = k1
  M(0, 0) = k1; M(0, 1) = k2; M(0, 2) = -k2;            rhs(0) = k1;
  // lower at 0:  r - A - B = -1
  M(1, 0) = 1.0; M(1, 1) = -1.0; M(1, 2) = -1.0;        rhs(1) = -1.0;
  // upper at w:  k2 (A ep - B em) - k1 t' = 0
  M(2, 1) = k2 * ep; M(2, 2) = -k2 * em; M(2, 3) = -k1; rhs(2) = 0.0;
  // lower at w:  A ep + B em - t' = 0
  M(3, 1) = ep; M(3, 2) = em; M(3, 3) = -1.0;           rhs(3) = 0.0;

  Eigen::Vector4cd sol = M.fullPivLu().solve(rhs);
  ScatteringResult out;
  out.r_amp = sol(0);
  out.t_amp = sol(3) * std::exp(-I1 * std::complex<double>(k1 * width));
  out.R = std::norm(out.r_amp);
  out.T = std::norm(out.t_amp); // same k1 on both free sides
  return out;
}

} // namespace ll

#include "ll/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace ll {

namespace {
const double SQ2 = std::sqrt(2.0);
} // namespace

Mat momentum_hamiltonian(const Eigen::Vector3d& p, const PhysParams& params) {
  if (params.eps == 0.0)
    throw SingularMatrixError("momentum_hamiltonian: eta' is singular at eps = 0");
  MatrixSet set = build_matrix_set(4);
  Mat etap = build_eta_prime(set, params.eps);
  Mat gp = Mat::Zero(4, 4);
  for (int i = 1; i <= 3; ++i) gp += p(i - 1) * set.gammas[i];
  return etap.inverse() * (gp - params.m * etap.adjoint());
}

double finite_branch_exact(double p2, double m, double eps) {
  const double rad = m * m * std::pow(1.0 - eps * eps, 2) - 2.0 * eps * p2;
  return (m * (1.0 + eps * eps) - std::sqrt(rad)) / (2.0 * eps);
}

double divergent_branch_exact(double p2, double m, double eps) {
  const double rad = m * m * std::pow(1.0 - eps * eps, 2) - 2.0 * eps * p2;
  return (m * (1.0 + eps * eps) + std::sqrt(rad)) / (2.0 * eps);
}

EigenStructure finite_and_divergent_eigenvalues(const Mat& H, const PhysParams& params) {
  const double m = params.m;
  const double eps = params.eps;
  if (eps <= 0.0)
    throw SingularMatrixError("finite_and_divergent_eigenvalues: requires eps > 0");

  Eigen::ComplexEigenSolver<Mat> solver(H);
  const auto& ev = solver.eigenvalues();

  EigenStructure out;
  std::vector<double> finite, divergent;
  const double threshold = m / (2.0 * eps);
  for (int i = 0; i < ev.size(); ++i) {
    out.max_imag = std::max(out.max_imag, std::abs(ev(i).imag()));
    (ev(i).real() < threshold ? finite : divergent).push_back(ev(i).real());
  }
  if (finite.size() != 2 || divergent.size() != 2)
    throw BranchOverlapError("finite_and_divergent_eigenvalues: branches not separated "
                             "(eps too large for this momentum)");
  std::sort(finite.begin(), finite.end());
  std::sort(divergent.begin(), divergent.end());
  out.finite = {finite[0], finite[1]};
  out.renormalized = {divergent[0] - m / eps, divergent[1] - m / eps};
  return out;
}

// ---- ansatz-state operators -----------------------------------------------

AnsatzState apply_K(const AnsatzState& state) {
  state.validate();
  AnsatzState out = state;
  out.g_radial = state.g_radial.scaled(-static_cast<double>(state.kappa));
  out.f_radial = state.f_radial.scaled(-static_cast<double>(state.kappa));
  return out;
}

AnsatzState apply_J2(const AnsatzState& state) {
  state.validate();
  const double s = state.j * (state.j + 1.0);
  AnsatzState out = state;
  out.g_radial = state.g_radial.scaled(s);
  out.f_radial = state.f_radial.scaled(s);
  return out;
}

AnsatzState apply_Jz(const AnsatzState& state) {
  state.validate();
  AnsatzState out = state;
  out.g_radial = state.g_radial.scaled(state.mj);
  out.f_radial = state.f_radial.scaled(state.mj);
  return out;
}

AnsatzState apply_H(const AnsatzState& state, const HamiltonianSpec& spec) {
  state.validate();
  const PhysParams& pp = spec.params;
  if (pp.eps == 0.0) throw SingularMatrixError("apply_H: eta' is singular at eps = 0");
  const double a = pp.a();
  const double ap = pp.a_prime();
  const double m = pp.m;
  const double kap = state.kappa;
  const bool coul = (spec.potential == Potential::coulomb);
  const double q2 = coul ? ap * pp.Za() / SQ2 : 0.0;
  const double p2 = coul ? a * pp.Za() / SQ2 : 0.0;

  // Work with F = r f, G = r g; the radial reduction of
  // H = eta'^{-1}(gamma_i p_i - m eta'^dag) + V(r) reads
  //   D1 = F' + (q2/r) F + ((p2 - kappa)/r) G - (m/sqrt2)(a' F - a G)
  //   D2 = G' - (q2/r) G - ((p2 + kappa)/r) F - (m/sqrt2)(a F - a' G)
  // with (H F, H G) = M^{-1} (D1, D2),  M = (1/sqrt2) [[-a', -a], [a, a']].
  RadialFunction F = state.f_radial.shifted(+1);
  RadialFunction G = state.g_radial.shifted(+1);

  RadialFunction D1 = F.derivative() + F.shifted(-1).scaled(q2) +
                      G.shifted(-1).scaled(p2 - kap) - F.scaled(ap * m / SQ2) +
                      G.scaled(a * m / SQ2);
  RadialFunction D2 = G.derivative() - G.shifted(-1).scaled(q2) -
                      F.shifted(-1).scaled(p2 + kap) - F.scaled(a * m / SQ2) +
                      G.scaled(ap * m / SQ2);

  const double det = 2.0 * pp.eps; // det M = (a^2 - a'^2)/2
  // M^{-1} = (1/(2 sqrt2 eps)) [[a', a], [-a, -a']]
  RadialFunction Fh = (D1.scaled(ap) + D2.scaled(a)).scaled(1.0 / (SQ2 * det));
  RadialFunction Gh = (D1.scaled(-a) + D2.scaled(-ap)).scaled(1.0 / (SQ2 * det));

  AnsatzState out = state;
  out.f_radial = Fh.shifted(-1);
  out.g_radial = Gh.shifted(-1);
  return out;
}

namespace {

AnsatzState apply_op(AnsatzOp op, const AnsatzState& state, const HamiltonianSpec& spec) {
  switch (op) {
    case AnsatzOp::H: return apply_H(state, spec);
    case AnsatzOp::J2: return apply_J2(state);
    case AnsatzOp::Jz: return apply_Jz(state);
    case AnsatzOp::K: return apply_K(state);
  }
  throw std::invalid_argument("apply_op: unknown operator");
}

double eval_or_zero(const RadialFunction& fn, double r) {
  return fn.is_zero() ? 0.0 : fn(r);
}

} // namespace

double commutator_residual(AnsatzOp opA, AnsatzOp opB, const AnsatzState& state,
                           const HamiltonianSpec& spec) {
  state.validate();
  const AnsatzState ab = apply_op(opA, apply_op(opB, state, spec), spec);
  const AnsatzState ba = apply_op(opB, apply_op(opA, state, spec), spec);

  // fixed log grid scaled to the state's decay length
  double lam = std::max(state.g_radial.decay(), state.f_radial.decay());
  if (lam <= 0.0) lam = 1.0;
  const int n = 64;
  const double r_lo = 0.05 / lam, r_hi = 30.0 / lam;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = r_lo * std::pow(r_hi / r_lo, static_cast<double>(i) / (n - 1));
    num = std::max(num, std::abs(eval_or_zero(ab.g_radial, r) - eval_or_zero(ba.g_radial, r)));
    num = std::max(num, std::abs(eval_or_zero(ab.f_radial, r) - eval_or_zero(ba.f_radial, r)));
    den = std::max(den, std::abs(eval_or_zero(state.g_radial, r)));
    den = std::max(den, std::abs(eval_or_zero(state.f_radial, r)));
  }
  if (den == 0.0) return 0.0;
  return num / den;
}

std::pair<int, bool> kappa_j_relation(double j) {
  const double twice = 2.0 * j;
  if (j <= 0.0 || std::abs(twice - std::round(twice)) > 1e-12 ||
      static_cast<long long>(std::llround(twice)) % 2 == 0)
    throw std::invalid_argument("kappa_j_relation: j must be a positive half-odd integer");
  const int kappa = static_cast<int>(std::llround(j + 0.5));
  const bool ok = std::abs(kappa * kappa - 0.25 - j * (j + 1.0)) < 1e-12;
  return {kappa, ok};
}

} // namespace ll

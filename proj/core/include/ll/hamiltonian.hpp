#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ll/algebra.hpp"
#include "ll/params.hpp"
#include "ll/radial_function.hpp"

// The eps-regularized Hamiltonian H = eta'^{-1}(gamma_i p_i - m eta'^dag)
// [+ V(r)]: momentum-space eigenvalue structure and renormalization, plus the
// action of H, K, J^2, J_z on the closed four-component ansatz family
// (g(r) Y_A, i f(r) Y_B) with theta = 0 angular spinors and kappa = j + 1/2.

namespace ll {

// ---- momentum space -------------------------------------------------------

// 4x4 matrix eta'^{-1}(gamma_i p_i - m eta'^dag). eps = 0 is singular.
Mat momentum_hamiltonian(const Eigen::Vector3d& p, const PhysParams& params);

struct EigenStructure {
  std::pair<double, double> finite;        // ~ p^2 / 2m branch
  std::pair<double, double> renormalized;  // divergent branch shifted by -m/eps
  double max_imag = 0.0;                   // largest |Im| among all four
};

// Classify the four eigenvalues of a momentum_hamiltonian matrix by magnitude
// relative to m/(2 eps). Throws BranchOverlapError when the two branches are
// not separated (p^2/2m >= m/(4 eps)).
EigenStructure finite_and_divergent_eigenvalues(const Mat& H, const PhysParams& params);

// Exact closed-form eigenvalues of the regularized momentum-space operator,
// lam+- = [m(1+eps^2) -+ sqrt(m^2 (1-eps^2)^2 - 2 eps p^2)] / (2 eps),
// used as the independent oracle for the eigensolver path.
double finite_branch_exact(double p2, double m, double eps);
double divergent_branch_exact(double p2, double m, double eps);

// ---- ansatz states --------------------------------------------------------

struct AnsatzState {
  double j = 0.5;
  double mj = 0.5;           // +/- 1/2 supported
  int kappa = 1;             // +(j + 1/2) only
  RadialFunction g_radial;   // upper-block radial profile g(r)
  RadialFunction f_radial;   // lower-block radial profile f(r)

  void validate() const {
    if (kappa < 1) throw std::invalid_argument("AnsatzState: kappa must be >= 1");
    if (std::abs(j - (kappa - 0.5)) > 1e-12)
      throw std::invalid_argument("AnsatzState: j must equal kappa - 1/2");
    if (std::abs(std::abs(mj) - 0.5) > 1e-12)
      throw std::invalid_argument("AnsatzState: only m_j = +/-1/2 supported");
  }
};

enum class Potential { free_particle, coulomb };

struct HamiltonianSpec {
  PhysParams params;
  Potential potential = Potential::free_particle;
};

// K = i gamma5 gamma0 (Sigma.L + I); on the ansatz family K psi = -kappa psi.
AnsatzState apply_K(const AnsatzState& state);

// Full Hamiltonian action on the radial pair, expressed in the same family
// (1/r terms become negative powers; validity domain r > 0).
AnsatzState apply_H(const AnsatzState& state, const HamiltonianSpec& spec);

// J^2 and J_z act as the scalars j(j+1) and m_j on the ansatz.
AnsatzState apply_J2(const AnsatzState& state);
AnsatzState apply_Jz(const AnsatzState& state);

enum class AnsatzOp { H, J2, Jz, K };

// sup-norm over a fixed r-grid of (A B - B A) state, relative to state norm.
double commutator_residual(AnsatzOp opA, AnsatzOp opB, const AnsatzState& state,
                           const HamiltonianSpec& spec);

// kappa = j + 1/2 together with the J^2 = K^2 - 1/4 consistency check.
std::pair<int, bool> kappa_j_relation(double j);

} // namespace ll

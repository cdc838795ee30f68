#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Shared physical parameters and quantum-number labels, plus the error
// taxonomy used across the library. Natural units throughout: hbar = c = 1,
// energies in units of the reference mass m unless stated otherwise.

namespace ll {

inline constexpr double kDefaultAlpha = 7.2973525693e-3; // CODATA fine-structure constant
inline constexpr double kElectronMassEV = 510998.9461;   // for eV presentation

struct PhysParams {
  double m = 1.0;               // reference mass (energy unit)
  int Z = 1;                    // atomic number
  double alpha = kDefaultAlpha; // fine-structure constant
  double eps = 0.0;             // eta' = eta - eps * eta^dagger regulator

  double a() const { return 1.0 + eps; }
  double a_prime() const { return 1.0 - eps; }
  double Za() const { return Z * alpha; }
  double bohr_radius() const { return 1.0 / (alpha * m); }

  void validate() const {
    if (m <= 0.0) throw std::invalid_argument("PhysParams: m must be positive");
    if (Z < 1) throw std::invalid_argument("PhysParams: Z must be a positive integer");
    if (Za() >= 1.0) throw std::invalid_argument("PhysParams: Z*alpha must be < 1");
    if (eps < 0.0 || eps >= 0.1)
      throw std::invalid_argument("PhysParams: eps must lie in [0, 0.1)");
  }
};

// Bound-state labels. Only kappa = +(j + 1/2) > 0 occurs for this equation,
// so kappa fixes j and the orbital labels; n = n' + kappa is the principal
// quantum number.
struct QuantumNumbers {
  int nprime = 0; // radial (series-termination) index, >= 0
  int kappa = 1;  // +(j + 1/2), >= 1

  int n() const { return nprime + kappa; }
  double j() const { return kappa - 0.5; }
  int l() const { return kappa - 1; }

  void validate() const {
    if (nprime < 0) throw std::invalid_argument("QuantumNumbers: n' must be >= 0");
    if (kappa < 1) throw std::invalid_argument("QuantumNumbers: kappa must be >= 1");
  }
};

// Error taxonomy: these conditions are contractual (callers may rely on the
// specific type), so they are distinct classes rather than bare runtime_errors.
struct NotBoundStateError : std::runtime_error {
  explicit NotBoundStateError(const std::string& w) : std::runtime_error(w) {}
};
struct SupercriticalCouplingError : std::runtime_error {
  explicit SupercriticalCouplingError(const std::string& w) : std::runtime_error(w) {}
};
struct BranchOverlapError : std::runtime_error {
  explicit BranchOverlapError(const std::string& w) : std::runtime_error(w) {}
};
struct RootNotBracketedError : std::runtime_error {
  explicit RootNotBracketedError(const std::string& w) : std::runtime_error(w) {}
};
struct WrongStateError : std::runtime_error {
  explicit WrongStateError(const std::string& w) : std::runtime_error(w) {}
};
struct GridInadequateError : std::runtime_error {
  explicit GridInadequateError(const std::string& w) : std::runtime_error(w) {}
};
struct InconsistentEnergyError : std::runtime_error {
  explicit InconsistentEnergyError(const std::string& w) : std::runtime_error(w) {}
};
struct DegenerateRecursionError : std::runtime_error {
  explicit DegenerateRecursionError(const std::string& w) : std::runtime_error(w) {}
};
struct EvanescentModeError : std::runtime_error {
  explicit EvanescentModeError(const std::string& w) : std::runtime_error(w) {}
};
struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& w) : std::runtime_error(w) {}
};

} // namespace ll

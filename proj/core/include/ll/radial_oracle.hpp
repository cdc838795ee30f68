#pragma once

#include <functional>
#include <vector>

#include "ll/coulomb.hpp"
#include "ll/params.hpp"

// Brute-force verification layer: fixed-step RK4 integration of the coupled
// first-order radial system with a Frobenius start, eigenvalues by shooting
// (bisection on the large-r defect), and composite-Simpson quadrature for
// norms. Everything here is deliberately independent of the series solution
// so the two paths can cross-check each other.

namespace ll {

enum class GridSpacing { uniform, log_spaced };

struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 4000;
  GridSpacing spacing = GridSpacing::log_spaced;

  // Default grid for a target principal quantum number: r_min = 1e-6 a_B,
  // r_max = 30 n^2 a_B, log-spaced (resolves both the origin and the tail).
  static RadialGrid for_state(int n, const PhysParams& params, int points = 4000);

  std::vector<double> nodes() const;

  void validate() const {
    if (!(r_min > 0.0 && r_min < r_max))
      throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max");
    if (points < 1000) throw std::invalid_argument("RadialGrid: points must be >= 1000");
  }
};

struct IntegrationResult {
  std::vector<double> F;
  std::vector<double> G;
  bool diverged = false;      // outward endpoint dominates (E far from an eigenvalue)
  double outward_tail = 0.0;  // raw outward F(r_max); sign feeds the shooting bisection
  double stitch_defect = 0.0; // |G| mismatch at the join point, relative to the peak
};

// Outward RK4 integration of
//   F' = -(q1 + q2/r) F - (p1 + (p2 - kappa)/r) G
//   G' =  (q1 + q2/r) G + (p1 + (p2 + kappa)/r) F
// from the Frobenius start (F, G) ~ r^s (1, b0/a0) at r_min.
//
// Forward integration cannot keep the tail clean: roundoff seeds the growing
// solution, which gains e^{+lambda r_max} by the right edge. The raw endpoint
// is preserved in outward_tail (its sign is exactly what shooting needs), but
// the stored F, G arrays have the contaminated tail replaced by a stable
// inward integration, scaled to match the outward solution at a join point
// chosen well above the contamination floor. stitch_defect records how well
// the two halves agree there; it is tiny exactly when E is an eigenvalue.
IntegrationResult integrate_radial(double E, const QuantumNumbers& quantum,
                                   const PhysParams& params, const RadialGrid& grid);

struct ShootingResult {
  double E = 0.0;
  std::vector<double> F_values;
  std::vector<double> G_values;
  double match_defect = 0.0; // outward/inward mismatch at the join, relative to peak
  int nodes = 0;             // interior sign changes of F
};

// Bisects E on the sign of F(r_max) inside a bracket isolating the level
// n = n' + kappa, then verifies the node count equals n'.
ShootingResult shoot_eigenvalue(int nprime, int kappa, const PhysParams& params,
                                const RadialGrid& grid);

// angular_factor * int w(r) r^2 dr by composite Simpson on the grid; throws
// GridInadequateError when the tail contributes more than 1e-10 of the total.
double quadrature_norm(const std::function<double(double)>& density_weight,
                       const RadialGrid& grid, double angular_factor = 1.0);

} // namespace ll

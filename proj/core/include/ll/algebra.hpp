#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ll/params.hpp"

// Fixed matrix representations: Pauli matrices, Dirac gamma matrices in the
// Dirac basis (gamma0 diagonal), and the nilpotent eta in 2 and 4 dimensions:
//   2D: eta = (sigma1 - i sigma2)/sqrt(2) = sqrt(2) [[0,0],[1,0]]
//   4D: eta = (gamma0 + i gamma5)/sqrt(2)
// All matrices are small dense complex; everything here is exact arithmetic
// up to floating point.

namespace ll {

using Mat = Eigen::MatrixXcd;

Mat pauli(int i);  // sigma_1, sigma_2, sigma_3 for i = 1..3
Mat gamma0();
Mat gamma(int i);  // gamma_1..gamma_3, Dirac basis
Mat gamma5();

struct MatrixSet {
  int dim = 0;
  // dim 4: {gamma0, gamma1, gamma2, gamma3, gamma5}
  // dim 2: {mu1 = I, mu2 = i sigma3, sigma1, sigma2, sigma3}
  std::vector<Mat> gammas;
  Mat eta;
  Mat eta_dag;
};

MatrixSet build_matrix_set(int dim);

// eta' = eta - eps * eta^dagger; invertible for eps != 0 (det ~ eps^(dim/2)).
Mat build_eta_prime(const MatrixSet& set, double eps);

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  double max_residual() const;
  bool all_pass(double tol = 1e-12) const;
};

// Runs every representation identity appropriate for the set's dimension and
// reports max elementwise residuals. Failures are reported, never thrown.
IdentityReport verify_algebra(const MatrixSet& set);

} // namespace ll

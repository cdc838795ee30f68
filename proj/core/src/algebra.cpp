#include "ll/algebra.hpp"

#include <cmath>

namespace ll {

namespace {
const std::complex<double> I1(0.0, 1.0);
const double SQ2 = std::sqrt(2.0);

double resid(const Mat& A, const Mat& B) {
  return (A - B).cwiseAbs().maxCoeff();
}
} // namespace

Mat pauli(int i) {
  Mat s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I1, I1, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1..3");
  }
  return s;
}

Mat gamma0() {
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = g(1, 1) = 1.0;
  g(2, 2) = g(3, 3) = -1.0;
  return g;
}

Mat gamma(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("gamma: index must be 1..3");
  Mat g = Mat::Zero(4, 4);
  Mat s = pauli(i);
  g.block(0, 2, 2, 2) = s;
  g.block(2, 0, 2, 2) = -s;
  return g;
}

Mat gamma5() {
  Mat g = Mat::Zero(4, 4);
  g.block(0, 2, 2, 2) = Mat::Identity(2, 2);
  g.block(2, 0, 2, 2) = Mat::Identity(2, 2);
  return g;
}

MatrixSet build_matrix_set(int dim) {
  MatrixSet set;
  set.dim = dim;
  if (dim == 2) {
    Mat mu1 = Mat::Identity(2, 2);
    Mat mu2 = I1 * pauli(3);
    set.gammas = {mu1, mu2, pauli(1), pauli(2), pauli(3)};
    set.eta = (pauli(1) - I1 * pauli(2)) / SQ2; // = sqrt(2) [[0,0],[1,0]]
  } else if (dim == 4) {
    set.gammas = {gamma0(), gamma(1), gamma(2), gamma(3), gamma5()};
    set.eta = (gamma0() + I1 * gamma5()) / SQ2;
  } else {
    throw std::invalid_argument("build_matrix_set: dim must be 2 or 4");
  }
  set.eta_dag = set.eta.adjoint();
  return set;
}

Mat build_eta_prime(const MatrixSet& set, double eps) {
  return set.eta - eps * set.eta_dag;
}

double IdentityReport::max_residual() const {
  double mx = 0.0;
  for (const auto& c : checks) mx = std::max(mx, c.residual);
  return mx;
}

bool IdentityReport::all_pass(double tol) const {
  for (const auto& c : checks)
    if (!(c.residual <= tol)) return false;
  return true;
}

IdentityReport verify_algebra(const MatrixSet& set) {
  IdentityReport rep;
  const Mat& eta = set.eta;
  const Mat& etd = set.eta_dag;
  const Mat Z = Mat::Zero(set.dim, set.dim);

  rep.checks.push_back({"eta^2 = 0", resid(eta * eta, Z)});
  rep.checks.push_back({"(eta^dag)^2 = 0", resid(etd * etd, Z)});

  if (set.dim == 2) {
    rep.checks.push_back({"eta + eta^dag = sqrt(2) sigma1", resid(eta + etd, SQ2 * pauli(1))});
    rep.checks.push_back(
        {"eta^dag eta = I + sigma3", resid(etd * eta, Mat::Identity(2, 2) + pauli(3))});
  } else {
    rep.checks.push_back({"eta + eta^dag = sqrt(2) gamma0", resid(eta + etd, SQ2 * set.gammas[0])});
    Mat ede = etd * eta;
    rep.checks.push_back({"(eta^dag eta)^2 = 2 eta^dag eta", resid(ede * ede, 2.0 * ede)});

    // Clifford algebra {gamma_mu, gamma_nu} = 2 g_{mu nu}, signature (+,-,-,-)
    const double g[4] = {1.0, -1.0, -1.0, -1.0};
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu; nu < 4; ++nu) {
        const Mat& gm = set.gammas[mu];
        const Mat& gn = set.gammas[nu];
        Mat expect = (mu == nu) ? Mat(2.0 * g[mu] * Mat::Identity(4, 4)) : Z;
        rep.checks.push_back({"{gamma_" + std::to_string(mu) + ", gamma_" + std::to_string(nu) + "}",
                              resid(gm * gn + gn * gm, expect)});
      }
    }
    rep.checks.push_back(
        {"gamma5 = i gamma0 gamma1 gamma2 gamma3",
         resid(set.gammas[4], I1 * set.gammas[0] * set.gammas[1] * set.gammas[2] * set.gammas[3])});
    rep.checks.push_back({"gamma5 anticommutes with gamma_mu",
                          [&] {
                            double mx = 0.0;
                            for (int mu = 0; mu < 4; ++mu)
                              mx = std::max(mx, resid(set.gammas[4] * set.gammas[mu] +
                                                          set.gammas[mu] * set.gammas[4],
                                                      Z));
                            return mx;
                          }()});
  }

  // Hermiticity and non-normality of eta
  int h_end = (set.dim == 2) ? 5 : 5;
  double herm = 0.0;
  for (int k = (set.dim == 2 ? 2 : 0); k < h_end; ++k) {
    const Mat& g = set.gammas[k];
    if (set.dim == 4 && k >= 1 && k <= 3) continue; // spatial gammas are anti-hermitian
    herm = std::max(herm, resid(g, g.adjoint().eval()));
  }
  rep.checks.push_back({"hermiticity of sigma/gamma0/gamma5", herm});
  // eta is non-normal: eta eta^dag != eta^dag eta. Report as a residual of the
  // claim "difference is nonzero" (0 means the inequality holds).
  double nonnormal = resid(eta * etd, etd * eta);
  rep.checks.push_back({"eta non-normal (>=1 expected, reported as 0 if so)",
                        nonnormal > 0.5 ? 0.0 : 1.0});
  return rep;
}

} // namespace ll

#include <doctest.h>

#include <cmath>

#include "ll/coulomb.hpp"

using namespace ll;

namespace {
const double SQ2 = std::sqrt(2.0);

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}
} // namespace

TEST_CASE("series constants: eps = 0 limits and lambda identity") {
  PhysParams pp; // Z = 1, physical alpha, eps = 0
  const double E1 = energy_closed_form(1, pp);
  SeriesConstants c = series_constants(E1, pp, 1);
  CHECK(c.q2 == doctest::Approx(c.p2).epsilon(1e-15)); // a = a' at eps = 0
  CHECK(c.s == doctest::Approx(1.0).epsilon(1e-14));   // s = kappa
  // lambda = sqrt(-2 E m) = m Z alpha / n
  CHECK(c.lambda == doctest::Approx(std::sqrt(-2.0 * E1 * pp.m)).epsilon(1e-14));
  CHECK(c.lambda == doctest::Approx(pp.m * pp.Za()).epsilon(1e-12));

  for (int n = 1; n <= 4; ++n) {
    for (int kappa = 1; kappa <= n; ++kappa) {
      SeriesConstants cn = series_constants(energy_closed_form(n, pp), pp, kappa);
      CHECK(cn.lambda == doctest::Approx(pp.m * pp.Za() / n).epsilon(1e-12));
    }
  }
}

TEST_CASE("series constants: finite-eps indicial exponent") {
  // s = sqrt(kappa^2 - 2 eps (Z alpha)^2) since q2^2 - p2^2 = -2 eps (Za)^2 + O(eps^2)... exact:
  // (a'^2 - a^2)(Za)^2/2 = -2 eps (Za)^2
  PhysParams pp;
  pp.alpha = 0.1;
  pp.eps = 0.01;
  const double E = -0.02; // bound regime requires E < -eps*m/(1+eps^2)
  SeriesConstants c = series_constants(E, pp, 1);
  const double s_expect = std::sqrt(1.0 - 2.0 * pp.eps * 0.01);
  CHECK(c.s == doctest::Approx(s_expect).epsilon(1e-12));
  CHECK(indicial_exponent(1, c) == doctest::Approx(s_expect).epsilon(1e-12));
  CHECK(c.s == doctest::Approx(0.99990).epsilon(1e-5));

  SeriesConstants c2 = series_constants(E, pp, 2);
  CHECK(indicial_exponent(2, c2) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("series constants: error taxonomy") {
  PhysParams pp;
  CHECK_THROWS_AS(series_constants(0.1, pp, 1), NotBoundStateError); // E > 0
  PhysParams bad;
  bad.alpha = 1.2; // Z alpha > 1
  CHECK_THROWS_AS(series_constants(-0.01, bad, 1), std::invalid_argument);
}

TEST_CASE("closed-form energies") {
  PhysParams pp;
  // high-precision arithmetic value of -alpha^2/2 with the default constant
  CHECK(energy_closed_form(1, pp) == doctest::Approx(-2.66257e-5).epsilon(1e-5));
  CHECK(energy_closed_form(1, pp) ==
        doctest::Approx(-pp.alpha * pp.alpha / 2.0).epsilon(1e-15));

  // Z^2/n^2 scaling: (n=2, Z=2) equals (n=1, Z=1)
  PhysParams z2;
  z2.Z = 2;
  CHECK(energy_closed_form(2, z2) == doctest::Approx(energy_closed_form(1, pp)).epsilon(1e-15));

  double prev = energy_closed_form(1, pp);
  for (int n = 2; n <= 12; ++n) {
    const double En = energy_closed_form(n, pp);
    CHECK(En > prev); // monotone increase toward 0-
    CHECK(En < 0.0);
    prev = En;
  }
  CHECK_THROWS_AS(energy_closed_form(0, pp), std::invalid_argument);
}

TEST_CASE("hydrogen ground state in physical units") {
  PhysParams pp;
  const double E_eV = energy_closed_form(1, pp) / pp.m * kElectronMassEV;
  CHECK(E_eV == doctest::Approx(-13.6057).epsilon(1e-3));
}

TEST_CASE("recursions: n'=0 termination equals the indicial ratio") {
  PhysParams pp;
  const double E = energy_closed_form(1, pp);
  RadialSolution sol = run_recursions(E, {0, 1}, pp);
  CHECK(sol.a_coeffs.size() == 1);
  CHECK(sol.b_coeffs.size() == 1);
  const double Za = pp.Za();
  // b0/a0 = (2 + sqrt2 Za)/(2 - sqrt2 Za) = 1/d0
  CHECK(sol.b_coeffs[0] ==
        doctest::Approx((2.0 + SQ2 * Za) / (2.0 - SQ2 * Za)).epsilon(1e-10));
  // termination ratio (lambda - q1)/p1 agrees
  const SeriesConstants& c = sol.constants;
  CHECK(sol.b_coeffs[0] == doctest::Approx((c.lambda - c.q1) / c.p1).epsilon(1e-10));
}

TEST_CASE("recursions: chains satisfy both recursion relations at every index") {
  PhysParams pp;
  pp.eps = 1e-4;
  pp.alpha = 0.2; // keeps the finite-eps roots well inside the validity region
  for (auto [nprime, kappa] :
       {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{0, 3}}) {
    const double E = solve_energy_finite_eps(nprime, kappa, pp);
    RadialSolution sol = run_recursions(E, {nprime, kappa}, pp);
    REQUIRE(static_cast<int>(sol.a_coeffs.size()) == nprime + 1);
    const SeriesConstants& c = sol.constants;

    // n = -1 (indicial) relations with a_{-1} = b_{-1} = 0
    const double i1 = (c.q2 + c.s) * sol.a_coeffs[0] + (c.p2 - kappa) * sol.b_coeffs[0];
    const double i2 = -(kappa + c.p2) * sol.a_coeffs[0] + (c.s - c.q2) * sol.b_coeffs[0];
    CHECK(std::abs(i1) <= 1e-12);
    CHECK(std::abs(i2) <= 1e-12);

    for (int n = 0; n < nprime; ++n) {
      const double lhs1 = (c.q2 + c.s + n + 1) * sol.a_coeffs[n + 1] +
                          (c.p2 - kappa) * sol.b_coeffs[n + 1];
      const double rhs1 = (c.lambda - c.q1) * sol.a_coeffs[n] - c.p1 * sol.b_coeffs[n];
      const double lhs2 = -(kappa + c.p2) * sol.a_coeffs[n + 1] +
                          (c.s + n + 1 - c.q2) * sol.b_coeffs[n + 1];
      const double rhs2 = c.p1 * sol.a_coeffs[n] + (c.q1 + c.lambda) * sol.b_coeffs[n];
      const double scale = std::abs(rhs1) + std::abs(rhs2) + 1e-300;
      CHECK(std::abs(lhs1 - rhs1) / scale <= 1e-12);
      CHECK(std::abs(lhs2 - rhs2) / scale <= 1e-12);
    }
    // termination
    CHECK(sol.b_coeffs[nprime] ==
          doctest::Approx((c.lambda - c.q1) / c.p1 * sol.a_coeffs[nprime]).epsilon(1e-10));
  }
}

TEST_CASE("recursions reject an off-spectrum energy") {
  PhysParams pp;
  const double E = 0.5 * (energy_closed_form(1, pp) + energy_closed_form(2, pp));
  CHECK_THROWS_AS(run_recursions(E, {0, 1}, pp), InconsistentEnergyError);
}

TEST_CASE("finite-eps quantization: convergence slope 1 and degeneracy") {
  PhysParams base;
  base.alpha = 0.2; // Z alpha large enough that roots exist down to eps = 1e-3

  SUBCASE("eps = 0 short-circuits to the closed form") {
    CHECK(solve_energy_finite_eps(0, 1, base) == energy_closed_form(1, base));
    CHECK(solve_energy_finite_eps(1, 2, base) == energy_closed_form(3, base));
  }

  SUBCASE("slope 1 +/- 0.2 over eps = 1e-3..1e-5") {
    for (auto [nprime, kappa] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{0, 2}}) {
      const double E0 = energy_closed_form(nprime + kappa, base);
      std::vector<double> es, errs;
      for (double eps : {1e-3, 1e-4, 1e-5}) {
        PhysParams pp = base;
        pp.eps = eps;
        const double E = solve_energy_finite_eps(nprime, kappa, pp);
        es.push_back(eps);
        errs.push_back(std::abs(E - E0) / std::abs(E0));
      }
      CHECK(loglog_slope(es, errs) == doctest::Approx(1.0).epsilon(0.2));
    }
  }

  SUBCASE("degeneracy at fixed n, finite eps") {
    PhysParams pp = base;
    pp.eps = 1e-3;
    for (int n = 2; n <= 4; ++n) {
      const double E0 = energy_closed_form(n, pp);
      std::vector<double> roots;
      for (int kappa = 1; kappa <= n; ++kappa)
        roots.push_back(solve_energy_finite_eps(n - kappa, kappa, pp));
      for (double r : roots)
        CHECK(std::abs(r - roots[0]) / std::abs(E0) <= 10.0 * pp.eps);
    }
  }

  SUBCASE("exact degeneracy at eps = 0") {
    PhysParams pp; // physical alpha
    for (int n = 2; n <= 4; ++n)
      for (int kappa = 1; kappa <= n; ++kappa)
        CHECK(solve_energy_finite_eps(n - kappa, kappa, pp) == energy_closed_form(n, pp));
  }
}

TEST_CASE("ground state: d0, spinor displays, normalization bookkeeping") {
  PhysParams pp;
  GroundStateWavefunction w = ground_state(pp, Spin::up);
  const double Za = pp.Za();
  CHECK(w.d0 == doctest::Approx((2.0 - SQ2 * Za) / (2.0 + SQ2 * Za)).epsilon(1e-14));
  CHECK(w.d0 == doctest::Approx(0.9897330).epsilon(1e-6));
  CHECK(w.lambda == doctest::Approx(pp.m * Za).epsilon(1e-15)); // Z / a_B

  // spin-up at theta = 0: components (1, 0, -i d0, 0) x radial
  Eigen::Vector4cd v = w.value(1.0, 0.0, 0.0);
  const double radial = w.N_computed / std::sqrt(4.0 * M_PI) * std::exp(-w.lambda);
  CHECK(std::abs(v(0) - radial) <= 1e-14 * radial);
  CHECK(std::abs(v(1)) == 0.0);
  CHECK(std::abs(v(2) - std::complex<double>(0.0, -w.d0 * radial)) <= 1e-14 * radial);
  CHECK(std::abs(v(3)) <= 1e-14 * radial);

  // spin-down display at general angles matches (0, 1, -i d0 sin e^{-i phi}, i d0 cos)
  GroundStateWavefunction wd = ground_state(pp, Spin::down);
  Eigen::Vector4cd vd = wd.value(2.0, 0.7, 1.3);
  const double rad2 = wd.N_computed / std::sqrt(4.0 * M_PI) * std::exp(-2.0 * wd.lambda);
  CHECK(std::abs(vd(0)) == 0.0);
  CHECK(std::abs(vd(1) - rad2) <= 1e-14 * rad2);
  CHECK(std::abs(vd(2) - std::complex<double>(0.0, -1.0) * wd.d0 * std::sin(0.7) *
                             std::exp(std::complex<double>(0.0, -1.3)) * rad2) <= 1e-13 * rad2);
  CHECK(std::abs(vd(3) - std::complex<double>(0.0, 1.0) * wd.d0 * std::cos(0.7) * rad2) <=
        1e-13 * rad2);

  // the closed-form N differs from the quadrature-forced one by exactly 2 sqrt(pi)
  CHECK(w.ratio_formula_over_computed == doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-14));

  // Za -> 0: d0 -> 1
  PhysParams tiny;
  tiny.alpha = 1e-8;
  CHECK(ground_state(tiny, Spin::up).d0 == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("radial functions: shapes and node structure") {
  PhysParams pp;

  // 1s: pure exponential
  RadialSolution s1 = run_recursions(energy_closed_form(1, pp), {0, 1}, pp);
  auto [f1, g1] = radial_functions(s1);
  const double lam = pp.m * pp.Za();
  CHECK(f1(1.0) / f1(0.5) == doctest::Approx(std::exp(-0.5 * lam)).epsilon(1e-12));
  CHECK(f1.base() == doctest::Approx(0.0).epsilon(1e-12)); // r^{l}, l = 0

  // kappa = 2: f(0) = g(0) = 0 (r^l with l = 1)
  RadialSolution s2 = run_recursions(energy_closed_form(2, pp), {0, 2}, pp);
  auto [f2, g2] = radial_functions(s2);
  CHECK(f2(1e-12) <= 1e-11);
  CHECK(g2(1e-12) <= 1e-11);

  // n = 2, n' = 1: exactly one sign change in the degree-1 polynomial
  RadialSolution s21 = run_recursions(energy_closed_form(2, pp), {1, 1}, pp);
  REQUIRE(s21.a_coeffs.size() == 2);
  CHECK(s21.a_coeffs[0] * s21.a_coeffs[1] < 0.0);

  auto [f21, g21] = radial_functions(s21);
  CHECK_THROWS_AS(f21(-1.0), std::invalid_argument);
}

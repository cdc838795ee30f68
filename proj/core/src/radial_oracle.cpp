#include "ll/radial_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace ll {

namespace {
const double SQ2 = std::sqrt(2.0);

// Coefficients of the coupled system; kept local so the oracle does not share
// code with the series solver it is meant to check.
struct SystemCoeffs {
  double p1, p2, q1, q2, s, b0, kap;
};

SystemCoeffs system_coeffs(double E, int kappa, const PhysParams& params) {
  const double m = params.m, a = params.a(), ap = params.a_prime(), Za = params.Za();
  SystemCoeffs c{};
  c.kap = kappa;
  c.p1 = a * (E + m) / SQ2;
  c.p2 = a * Za / SQ2;
  c.q1 = ap * (E - m) / SQ2;
  c.q2 = ap * Za / SQ2;
  const double s2 = kappa * kappa + c.q2 * c.q2 - c.p2 * c.p2;
  if (s2 <= 0.0)
    throw SupercriticalCouplingError("integrate_radial: supercritical coupling");
  c.s = std::sqrt(s2);
  c.b0 = (c.q2 + c.s) / (c.kap - c.p2);
  return c;
}

inline void rhs(const SystemCoeffs& c, double r, double F, double G, double& dF, double& dG) {
  dF = -(c.q1 + c.q2 / r) * F - (c.p1 + (c.p2 - c.kap) / r) * G;
  dG = (c.q1 + c.q2 / r) * G + (c.p1 + (c.p2 + c.kap) / r) * F;
}

inline void rk4_step(const SystemCoeffs& c, double r0, double r1, double& F, double& G) {
  const double h = r1 - r0;
  double k1F, k1G, k2F, k2G, k3F, k3G, k4F, k4G;
  rhs(c, r0, F, G, k1F, k1G);
  rhs(c, r0 + 0.5 * h, F + 0.5 * h * k1F, G + 0.5 * h * k1G, k2F, k2G);
  rhs(c, r0 + 0.5 * h, F + 0.5 * h * k2F, G + 0.5 * h * k2G, k3F, k3G);
  rhs(c, r1, F + h * k3F, G + h * k3G, k4F, k4G);
  F += h / 6.0 * (k1F + 2.0 * k2F + 2.0 * k3F + k4F);
  G += h / 6.0 * (k1G + 2.0 * k2G + 2.0 * k3G + k4G);
}

// One grid interval, internally substepped so the local Lipschitz scale times
// the substep stays small; the log grid is fine near the origin but its
// absolute steps at large r would otherwise dominate the truncation error.
inline void rk4_interval(const SystemCoeffs& c, double r0, double r1, double theta, double& F,
                         double& G) {
  const double rmid = std::min(std::abs(r0), std::abs(r1));
  const double L = std::abs(c.q1) + std::abs(c.p1) +
                   (std::abs(c.q2) + std::abs(c.p2) + std::abs(c.kap)) / std::max(rmid, 1e-300);
  int m = static_cast<int>(std::ceil(std::abs(r1 - r0) * L / theta));
  m = std::clamp(m, 1, 64);
  double ra = r0;
  for (int k = 1; k <= m; ++k) {
    const double rb = r0 + (r1 - r0) * (static_cast<double>(k) / m);
    rk4_step(c, ra, rb, F, G);
    ra = rb;
  }
}
} // namespace

RadialGrid RadialGrid::for_state(int n, const PhysParams& params, int points) {
  const double aB = params.bohr_radius();
  RadialGrid g;
  g.r_min = 1e-6 * aB;
  g.r_max = 30.0 * n * n * aB;
  g.points = points;
  g.spacing = GridSpacing::log_spaced;
  return g;
}

std::vector<double> RadialGrid::nodes() const {
  validate();
  std::vector<double> r(points);
  if (spacing == GridSpacing::log_spaced) {
    const double ratio = r_max / r_min;
    for (int i = 0; i < points; ++i)
      r[i] = r_min * std::pow(ratio, static_cast<double>(i) / (points - 1));
  } else {
    const double h = (r_max - r_min) / (points - 1);
    for (int i = 0; i < points; ++i) r[i] = r_min + h * i;
  }
  return r;
}

IntegrationResult integrate_radial(double E, const QuantumNumbers& quantum,
                                   const PhysParams& params, const RadialGrid& grid) {
  quantum.validate();
  if (E >= 0.0) throw std::invalid_argument("integrate_radial: need E < 0");
  const SystemCoeffs c = system_coeffs(E, quantum.kappa, params);
  const std::vector<double> r = grid.nodes();

  IntegrationResult out;
  out.F.resize(r.size());
  out.G.resize(r.size());

  // Substep budget tied to the grid resolution: the default 4000-point grid
  // integrates with an effective step of 0.01 in Lipschitz units, and refining
  // the grid tightens it proportionally so 4th-order convergence stays visible.
  const double theta = 0.01 * 4000.0 / grid.points;

  // Frobenius start (F, G) = r^s (1, b0)
  double F = std::pow(r[0], c.s);
  double G = c.b0 * F;
  out.F[0] = F;
  out.G[0] = G;

  bool renormed = false;
  for (size_t i = 0; i + 1 < r.size(); ++i) {
    rk4_interval(c, r[i], r[i + 1], theta, F, G);

    if (std::abs(F) > 1e250 || std::abs(G) > 1e250) {
      // linear system: rescale everything to keep going without overflow
      const double scale = 1e-250;
      F *= scale;
      G *= scale;
      for (size_t k = 0; k <= i; ++k) {
        out.F[k] *= scale;
        out.G[k] *= scale;
      }
      renormed = true;
    }
    out.F[i + 1] = F;
    out.G[i + 1] = G;
  }
  out.outward_tail = out.F.back();

  const size_t N = out.F.size();

  // Walk back from r_max over the monotonically growing contamination (or the
  // genuine divergence) to the valley where the outward solution was smallest.
  size_t iv = N - 1;
  while (iv > 0 && std::abs(out.F[iv - 1]) < std::abs(out.F[iv])) --iv;

  // physical envelope: the largest |F| at or before the valley
  double peak = 0.0;
  size_t ipk = 0;
  for (size_t i = 0; i <= iv; ++i) {
    if (std::abs(out.F[i]) > peak) {
      peak = std::abs(out.F[i]);
      ipk = i;
    }
  }
  out.diverged = renormed || (peak > 0.0 && std::abs(out.outward_tail) > peak);

  // Replace the contaminated tail by a stable inward integration whenever the
  // bound-state asymptotics exist. The join point sits a quarter of the way
  // (logarithmically) from the peak down to the valley floor, where the
  // outward solution is still orders of magnitude above its contamination.
  const double lam2 = c.q1 * c.q1 - c.p1 * c.p1;
  if (iv + 1 < N && iv > ipk && peak > 0.0 && lam2 > 0.0) {
    const double floor_v = std::max(std::abs(out.F[iv]), 1e-300);
    const double target = peak * std::pow(floor_v / peak, 0.25);
    size_t join = ipk;
    while (join < iv && std::abs(out.F[join]) > target) ++join;

    const double lam = std::sqrt(lam2);
    std::vector<double> Fi(N), Gi(N);
    Fi[N - 1] = 1.0;
    Gi[N - 1] = (lam - c.q1) / c.p1; // decaying eigenvector of the far-field system
    for (size_t i = N - 1; i > join; --i) {
      double Fv = Fi[i], Gv = Gi[i];
      rk4_interval(c, r[i], r[i - 1], theta, Fv, Gv);
      if (std::abs(Fv) > 1e250 || std::abs(Gv) > 1e250) {
        const double scale = 1e-250;
        Fv *= scale;
        Gv *= scale;
        for (size_t k = i; k < N; ++k) {
          Fi[k] *= scale;
          Gi[k] *= scale;
        }
      }
      Fi[i - 1] = Fv;
      Gi[i - 1] = Gv;
    }
    if (Fi[join] != 0.0 && std::isfinite(Fi[join])) {
      const double scale = out.F[join] / Fi[join];
      out.stitch_defect = std::abs(out.G[join] - scale * Gi[join]) / peak;
      for (size_t i = join + 1; i < N; ++i) {
        out.F[i] = scale * Fi[i];
        out.G[i] = scale * Gi[i];
      }
    }
  }
  return out;
}

ShootingResult shoot_eigenvalue(int nprime, int kappa, const PhysParams& params,
                                const RadialGrid& grid) {
  params.validate();
  QuantumNumbers q{nprime, kappa};
  q.validate();
  const int n = q.n();
  const double Za = params.Za();
  const auto level = [&](int nn) { return -params.m * Za * Za / (2.0 * nn * nn); };
  const double E0 = level(n);

  // Midpoint bracket toward neighboring levels isolates exactly one root of
  // the defect; a finite regulator shifts every level by about -m*eps, so the
  // bracket is widened accordingly and kept inside the validity region.
  double lo = (n > 1) ? 0.5 * (E0 + level(n - 1)) : 2.0 * E0;
  double hi = 0.5 * (E0 + level(n + 1));
  if (params.eps > 0.0) {
    lo -= params.m * params.eps;
    hi = std::min(hi - params.m * params.eps, -1.05 * params.eps * params.m);
    if (!(lo < hi))
      throw RootNotBracketedError("shoot_eigenvalue: bracket collapsed by the regulator");
  }

  auto defect = [&](double E) {
    IntegrationResult res = integrate_radial(E, q, params, grid);
    return res.outward_tail;
  };

  double flo = defect(lo);
  double fhi = defect(hi);
  if ((flo > 0.0) == (fhi > 0.0))
    throw RootNotBracketedError("shoot_eigenvalue: no sign change over the level bracket");

  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = defect(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  ShootingResult out;
  out.E = 0.5 * (lo + hi);
  IntegrationResult res = integrate_radial(out.E, q, params, grid);
  out.F_values = std::move(res.F);
  out.G_values = std::move(res.G);
  out.match_defect = res.stitch_defect;

  // Interior node count over the stitched solution; skip samples below 1e-10
  // of the peak (the r^s head and the underflowed far tail carry no sign
  // information worth counting).
  double peak = 0.0;
  for (double v : out.F_values) peak = std::max(peak, std::abs(v));
  double prev = 0.0;
  for (double v : out.F_values) {
    if (std::abs(v) < 1e-10 * peak) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++out.nodes;
    prev = v;
  }
  if (out.nodes != nprime)
    throw WrongStateError("shoot_eigenvalue: converged to a state with the wrong node count");
  return out;
}

double quadrature_norm(const std::function<double(double)>& density_weight,
                       const RadialGrid& grid, double angular_factor) {
  const std::vector<double> r = grid.nodes();
  const size_t N = r.size();

  // Composite Simpson in the grid's natural coordinate. For the log grid the
  // coordinate is t = ln r with dr = r dt, so the integrand gains a factor r.
  std::vector<double> y(N);
  double dt;
  if (grid.spacing == GridSpacing::log_spaced) {
    dt = std::log(r[1] / r[0]);
    for (size_t i = 0; i < N; ++i) y[i] = density_weight(r[i]) * r[i] * r[i] * r[i];
  } else {
    dt = r[1] - r[0];
    for (size_t i = 0; i < N; ++i) y[i] = density_weight(r[i]) * r[i] * r[i];
  }

  auto simpson = [&](size_t i0, size_t i1) { // inclusive, i1-i0 even
    double acc = y[i0] + y[i1];
    for (size_t i = i0 + 1; i < i1; ++i) acc += ((i - i0) % 2 == 1 ? 4.0 : 2.0) * y[i];
    return acc * dt / 3.0;
  };

  double total;
  if (N % 2 == 1) {
    total = simpson(0, N - 1);
  } else {
    // even node count: Simpson up to N-4, Simpson 3/8 on the last 3 intervals
    total = simpson(0, N - 4) +
            3.0 * dt / 8.0 * (y[N - 4] + 3.0 * y[N - 3] + 3.0 * y[N - 2] + y[N - 1]);
  }
  total *= angular_factor;

  // tail adequacy: last 5% of the grid must be negligible
  const size_t tail0 = N - N / 20 - 1;
  double tail = 0.0;
  for (size_t i = tail0; i + 1 < N; ++i) tail += 0.5 * (y[i] + y[i + 1]) * dt;
  tail *= angular_factor;
  if (std::abs(total) > 0.0 && std::abs(tail) > 1e-10 * std::abs(total))
    throw GridInadequateError("quadrature_norm: integrand tail not captured by the grid");
  return total;
}

} // namespace ll

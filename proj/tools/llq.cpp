// llq: command-line front end for the Levy-Leblond equation library.
// Subcommands: spectrum, wavefunction, scatter, verify, oracle-compare.
// Emits deterministic CSV (17 significant digits) or JSON with a meta /
// conventions / rows layout. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ll/algebra.hpp"
#include "ll/coulomb.hpp"
#include "ll/hamiltonian.hpp"
#include "ll/planewave.hpp"
#include "ll/radial_oracle.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputSink {
  std::string path; // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open output path: " + path);
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + path);
  }
};

struct CommonOpts {
  ll::PhysParams params;
  std::string format = "csv";
  std::string units = "natural";
  std::string output;
  double electron_mass_ev = ll::kElectronMassEV;

  double present_energy(double E) const {
    return units == "eV" ? E / params.m * electron_mass_ev : E;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool alpha_from_env) {
  cmd->add_option("--Z", o.params.Z, "atomic number");
  cmd->add_option("--m", o.params.m, "reference mass (natural units)");
  cmd->add_option("--eps", o.params.eps, "eta' regulator epsilon");
  auto* alpha = cmd->add_option("--alpha", o.params.alpha, "fine-structure constant");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--units", o.units, "natural or eV")
      ->check(CLI::IsMember({"natural", "eV"}));
  cmd->add_option("--output", o.output, "output path (default stdout)");
  cmd->add_option("--electron-mass-eV", o.electron_mass_ev,
                  "electron mass used for eV presentation");
  if (alpha_from_env) {
    if (const char* env = std::getenv("LL_ALPHA")) {
      // flag wins over the environment; preload the env value as the default
      double v = std::strtod(env, nullptr);
      if (v > 0.0 && !alpha->count()) o.params.alpha = v;
      alpha->default_val(o.params.alpha);
    }
  }
}

json conventions_block(const CommonOpts& o) {
  json c;
  c["units"] = (o.units == "eV") ? "energies in eV via configured electron mass"
                                 : "natural units, hbar = c = 1, m as energy unit";
  c["coefficient_scale"] = "a0 = 1";
  c["normalization"] =
      "wavefunction normalization fixed by quadrature (int |psi|^2 d^3r = 1); the "
      "closed-form N differs by the constant factor reported as "
      "norm_formula_over_computed";
  c["norm_formula_over_computed"] = 2.0 * std::sqrt(M_PI);
  return c;
}

std::string rows_to_csv(const std::vector<std::string>& header,
                        const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt17(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string emit_table(const CommonOpts& o, const std::string& command,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows,
                       json extra_meta = json::object()) {
  if (o.format == "csv") return rows_to_csv(header, rows);
  json j;
  j["meta"] = extra_meta;
  j["meta"]["command"] = command;
  j["meta"]["Z"] = o.params.Z;
  j["meta"]["alpha"] = o.params.alpha;
  j["meta"]["eps"] = o.params.eps;
  j["meta"]["units"] = o.units;
  j["conventions"] = conventions_block(o);
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json r;
    for (size_t i = 0; i < row.size(); ++i) r[header[i]] = row[i];
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(const CommonOpts& o, int n_max) {
  o.params.validate();
  std::vector<std::vector<double>> rows;
  for (int n = 1; n <= n_max; ++n) {
    const double E0 = ll::energy_closed_form(n, o.params);
    for (int kappa = 1; kappa <= n; ++kappa) {
      const int nprime = n - kappa;
      const double Efe = ll::solve_energy_finite_eps(nprime, kappa, o.params);
      ll::RadialGrid grid = ll::RadialGrid::for_state(n, o.params);
      const double Esh = ll::shoot_eigenvalue(nprime, kappa, o.params, grid).E;
      const double rel = std::abs(Esh - E0) / std::abs(E0);
      rows.push_back({static_cast<double>(n), static_cast<double>(nprime),
                      static_cast<double>(kappa), kappa - 0.5, o.present_energy(E0),
                      o.present_energy(Efe), o.present_energy(Esh), rel});
    }
  }
  OutputSink{o.output}.write(emit_table(
      o, "spectrum",
      {"n", "nprime", "kappa", "j", "E_closed_form", "E_finite_eps", "E_shooting", "rel_err"},
      rows));
  return 0;
}

// ---- wavefunction ---------------------------------------------------------

int cmd_wavefunction(const CommonOpts& o, const std::string& state, const std::string& spin,
                     double theta, int points) {
  o.params.validate();
  // state selector: "<n><spectroscopic letter>" (1s, 2s, 2p, ...) mapping to
  // l = kappa - 1, n' = n - kappa
  static const std::string letters = "spdfgh";
  if (state.size() < 2) throw std::invalid_argument("--state: expected e.g. 1s, 2p");
  const int n = state[0] - '0';
  const size_t l = letters.find(state[1]);
  if (n < 1 || l == std::string::npos || static_cast<int>(l) >= n)
    throw std::invalid_argument("--state: unrecognized state selector");
  const int kappa = static_cast<int>(l) + 1;
  const int nprime = n - kappa;

  const double E = ll::solve_energy_finite_eps(nprime, kappa, o.params);
  ll::RadialSolution sol = ll::run_recursions(E, {nprime, kappa}, o.params);
  auto [f, g] = ll::radial_functions(sol);
  ll::GroundStateWavefunction gs = ll::ground_state(
      o.params, spin == "down" ? ll::Spin::down : ll::Spin::up);

  const double aB = o.params.bohr_radius();
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < points; ++i) {
    const double r = 0.01 * aB * std::pow(30.0 / 0.01, static_cast<double>(i) / (points - 1));
    rows.push_back({r, f(r), g(r)});
  }

  json meta;
  meta["state"] = state;
  meta["spin"] = spin;
  meta["E"] = o.present_energy(E);
  meta["s"] = sol.constants.s;
  meta["lambda"] = sol.constants.lambda;
  meta["d0"] = gs.d0;
  meta["N_computed"] = gs.N_computed;
  meta["N_paper_formula"] = gs.N_formula;
  meta["ratio"] = gs.ratio_formula_over_computed;
  // angular spinor at the requested theta (phi = 0), radial factor removed
  {
    Eigen::Vector4cd v = gs.value(1.0, theta, 0.0);
    const double radial = gs.N_computed / std::sqrt(4.0 * M_PI) * std::exp(-gs.lambda);
    json sp = json::array();
    for (int i = 0; i < 4; ++i)
      sp.push_back({v(i).real() / radial, v(i).imag() / radial});
    meta["spinor_theta"] = sp;
  }
  OutputSink{o.output}.write(emit_table(o, "wavefunction", {"r", "f", "g"}, rows, meta));
  return 0;
}

// ---- scatter --------------------------------------------------------------

int cmd_scatter(const CommonOpts& o, bool barrier, double V0, double width, double E_single,
                double E_min, double E_max, int points) {
  std::vector<double> energies;
  if (E_single > 0.0) {
    energies.push_back(E_single);
  } else {
    for (int i = 0; i < points; ++i)
      energies.push_back(E_min + (E_max - E_min) * i / std::max(points - 1, 1));
  }
  std::vector<std::vector<double>> rows;
  for (double E : energies) {
    ll::ScatteringResult s = barrier ? ll::solve_barrier(E, V0, width, o.params.m)
                                     : ll::solve_step(E, V0, o.params.m);
    rows.push_back({E, s.R, s.T});
  }
  json meta;
  meta["potential"] = barrier ? "barrier" : "step";
  meta["V0"] = V0;
  if (barrier) meta["width"] = width;
  OutputSink{o.output}.write(emit_table(o, "scatter", {"E", "R", "T"}, rows, meta));
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyContext {
  bool all_pass = true;
  void report(const std::string& suite, const std::string& name, double residual,
              double tol) {
    const bool ok = residual <= tol;
    all_pass = all_pass && ok;
    std::printf("[%s] %-58s residual %.3e  tol %.0e  %s\n", suite.c_str(), name.c_str(),
                residual, tol, ok ? "PASS" : "FAIL");
  }
};

void verify_algebra_suite(VerifyContext& v) {
  for (int dim : {2, 4}) {
    ll::MatrixSet set = ll::build_matrix_set(dim);
    ll::IdentityReport rep = ll::verify_algebra(set);
    for (const auto& c : rep.checks)
      v.report("algebra", "dim " + std::to_string(dim) + ": " + c.name, c.residual, 1e-12);
  }
}

void verify_dispersion_suite(VerifyContext& v) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> uE(0.01, 5.0), um(0.2, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double E = uE(rng), m = um(rng);
    auto [plus, minus] = ll::momentum_modes(E, m);
    for (const auto& mode : {plus, minus}) {
      Eigen::Matrix2cd M;
      M << 0.0, std::sqrt(2.0) * E, std::sqrt(2.0) * m, 0.0;
      worst = std::max(worst,
                       (M * mode.spinor - mode.p * mode.spinor).cwiseAbs().maxCoeff() /
                           std::max(1.0, std::sqrt(2.0) * E));
    }
  }
  v.report("dispersion", "momentum-space equation residual (200 random modes)", worst, 1e-12);

  // scattering against the closed forms on a 10x10 grid
  double worst_rt = 0.0, worst_cons = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int k = 0; k < 10; ++k) {
      const double E = 0.1 + 0.27 * i, V0 = 0.05 + 0.23 * k, m = 1.0, w = 1.1;
      ll::ScatteringResult st = ll::solve_step(E, V0, m);
      const double k1 = std::sqrt(2.0 * E * m);
      double Rref;
      if (E > V0) {
        const double k2 = std::sqrt(2.0 * (E - V0) * m);
        Rref = std::pow((k1 - k2) / (k1 + k2), 2);
      } else {
        Rref = 1.0;
      }
      worst_rt = std::max(worst_rt, std::abs(st.R - Rref));
      worst_cons = std::max(worst_cons, std::abs(st.R + st.T - 1.0));
      ll::ScatteringResult ba = ll::solve_barrier(E, V0, w, m);
      double Tref;
      if (E > V0) {
        const double k2 = std::sqrt(2.0 * (E - V0) * m);
        Tref = 1.0 / (1.0 + V0 * V0 * std::pow(std::sin(k2 * w), 2) / (4.0 * E * (E - V0)));
      } else {
        const double kap = std::sqrt(2.0 * (V0 - E) * m);
        Tref = 1.0 / (1.0 + V0 * V0 * std::pow(std::sinh(kap * w), 2) / (4.0 * E * (V0 - E)));
      }
      worst_rt = std::max(worst_rt, std::abs(ba.T - Tref));
      worst_cons = std::max(worst_cons, std::abs(ba.R + ba.T - 1.0));
    }
  }
  v.report("dispersion", "step/barrier R,T vs closed forms (100-pt grid)", worst_rt, 1e-10);
  v.report("dispersion", "current conservation R+T=1", worst_cons, 1e-10);
}

void verify_hamiltonian_suite(VerifyContext& v) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> up(-0.3, 0.3);
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    ll::PhysParams pp;
    pp.eps = eps;
    double worst_fin = 0.0, worst_ren = 0.0, worst_im = 0.0;
    for (int i = 0; i < 100; ++i) {
      Eigen::Vector3d p(up(rng), up(rng), up(rng));
      if (p.norm() > 0.3) p *= 0.3 / p.norm();
      ll::EigenStructure es =
          ll::finite_and_divergent_eigenvalues(ll::momentum_hamiltonian(p, pp), pp);
      const double kin = p.squaredNorm() / 2.0;
      worst_fin = std::max({worst_fin, std::abs(es.finite.first - kin),
                            std::abs(es.finite.second - kin)});
      worst_ren = std::max({worst_ren, std::abs(es.renormalized.first + kin),
                            std::abs(es.renormalized.second + kin)});
      worst_im = std::max(worst_im, es.max_imag);
    }
    const std::string tag = "eps=" + std::to_string(eps);
    v.report("hamiltonian", tag + ": finite pair vs p^2/2m (100 momenta)", worst_fin,
             5.0 * eps);
    v.report("hamiltonian", tag + ": renormalized pair vs -p^2/2m", worst_ren, 5.0 * eps);
    v.report("hamiltonian", tag + ": eigenvalue imaginary parts", worst_im, 1e-10 / eps);
  }
}

void verify_commutators_suite(VerifyContext& v, double eps) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uc(-1.0, 1.0), ul(0.3, 2.0);
  const std::vector<std::pair<ll::AnsatzOp, ll::AnsatzOp>> pairs = {
      {ll::AnsatzOp::H, ll::AnsatzOp::J2}, {ll::AnsatzOp::H, ll::AnsatzOp::Jz},
      {ll::AnsatzOp::H, ll::AnsatzOp::K},  {ll::AnsatzOp::K, ll::AnsatzOp::J2},
      {ll::AnsatzOp::K, ll::AnsatzOp::Jz}};
  double worst = 0.0;
  for (ll::Potential pot : {ll::Potential::free_particle, ll::Potential::coulomb}) {
    ll::HamiltonianSpec spec;
    spec.params.eps = eps;
    spec.potential = pot;
    for (int i = 0; i < 25; ++i) {
      ll::AnsatzState st;
      st.kappa = 1 + i % 3;
      st.j = st.kappa - 0.5;
      st.mj = (i % 2 == 0) ? 0.5 : -0.5;
      const double lam = ul(rng);
      st.g_radial = ll::RadialFunction(st.kappa, lam, {uc(rng), uc(rng), uc(rng)});
      st.f_radial = ll::RadialFunction(st.kappa, lam, {uc(rng), uc(rng), uc(rng)});
      for (auto [A, B] : pairs)
        worst = std::max(worst, ll::commutator_residual(A, B, st, spec));
    }
  }
  v.report("commutators", "all operator pairs, 50 random states, both spins", worst, 1e-9);
}

void verify_coulomb_suite(VerifyContext& v) {
  ll::PhysParams pp;
  // lambda identity and exact eps = 0 degeneracy
  double worst_lam = 0.0, worst_deg = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const double E0 = ll::energy_closed_form(n, pp);
    for (int kappa = 1; kappa <= n; ++kappa) {
      ll::SeriesConstants c = ll::series_constants(E0, pp, kappa);
      worst_lam = std::max(worst_lam,
                           std::abs(c.lambda - pp.m * pp.Za() / n) / (pp.m * pp.Za() / n));
      worst_deg = std::max(worst_deg,
                           std::abs(ll::solve_energy_finite_eps(n - kappa, kappa, pp) - E0));
    }
  }
  v.report("coulomb", "lambda = m Z alpha / n at closed-form energies", worst_lam, 1e-12);
  v.report("coulomb", "exact degeneracy at eps = 0", worst_deg, 0.0);

  const double ev = ll::energy_closed_form(1, pp) / pp.m * ll::kElectronMassEV;
  v.report("coulomb", "hydrogen n=1 at -13.6057 eV", std::abs(ev + 13.6057) / 13.6057, 1e-3);

  // ground-state d0 and norm bookkeeping
  ll::GroundStateWavefunction w = ll::ground_state(pp, ll::Spin::up);
  const double d0_ref =
      (2.0 - std::sqrt(2.0) * pp.Za()) / (2.0 + std::sqrt(2.0) * pp.Za());
  v.report("coulomb", "ground-state d0 closed form", std::abs(w.d0 - d0_ref), 1e-12);
}

void verify_oracle_suite(VerifyContext& v) {
  for (int Z : {1, 2}) {
    ll::PhysParams pp;
    pp.Z = Z;
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      const double E0 = ll::energy_closed_form(n, pp);
      for (int kappa = 1; kappa <= n; ++kappa) {
        ll::RadialGrid grid = ll::RadialGrid::for_state(n, pp);
        const double E = ll::shoot_eigenvalue(n - kappa, kappa, pp, grid).E;
        worst = std::max(worst, std::abs(E - E0) / std::abs(E0));
      }
    }
    v.report("oracle", "Z=" + std::to_string(Z) + ": shooting vs closed form, n <= 4", worst,
             1e-6);
  }
}

int cmd_verify(const std::string& suite, double eps) {
  VerifyContext v;
  const bool all = suite == "all";
  if (all || suite == "algebra") verify_algebra_suite(v);
  if (all || suite == "dispersion") verify_dispersion_suite(v);
  if (all || suite == "hamiltonian") verify_hamiltonian_suite(v);
  if (all || suite == "commutators") verify_commutators_suite(v, eps);
  if (all || suite == "coulomb") verify_coulomb_suite(v);
  if (all || suite == "oracle") verify_oracle_suite(v);
  std::printf("%s\n", v.all_pass ? "ALL CHECKS PASSED" : "VERIFICATION FAILED");
  return v.all_pass ? 0 : 1;
}

// ---- oracle-compare -------------------------------------------------------

int cmd_oracle_compare(const CommonOpts& o, int n_max) {
  o.params.validate();
  std::vector<std::vector<double>> rows;
  for (int n = 1; n <= n_max; ++n) {
    for (int kappa = 1; kappa <= n; ++kappa) {
      const int nprime = n - kappa;
      const double Es = ll::solve_energy_finite_eps(nprime, kappa, o.params);
      ll::RadialGrid grid = ll::RadialGrid::for_state(n, o.params);
      const double Eo = ll::shoot_eigenvalue(nprime, kappa, o.params, grid).E;
      rows.push_back({static_cast<double>(n), static_cast<double>(nprime),
                      static_cast<double>(kappa), o.present_energy(Es), o.present_energy(Eo),
                      std::abs(Eo - Es), std::abs(Eo - Es) / std::abs(Es)});
    }
  }
  OutputSink{o.output}.write(emit_table(
      o, "oracle-compare",
      {"n", "nprime", "kappa", "E_series", "E_shooting", "abs_diff", "rel_diff"}, rows));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levy-Leblond equation toolkit: spectra, wavefunctions, scattering, "
               "verification"};
  app.require_subcommand(1);

  CommonOpts o_spec, o_wave, o_scat, o_cmp;
  int n_max_spec = 3, n_max_cmp = 3;
  auto* spectrum = app.add_subcommand("spectrum", "bound-state energy table");
  add_common(spectrum, o_spec, true);
  spectrum->add_option("--n-max", n_max_spec, "largest principal quantum number")
      ->check(CLI::PositiveNumber);

  std::string state = "1s", spin = "up";
  double theta = 0.0;
  int wave_points = 200;
  auto* wave = app.add_subcommand("wavefunction", "radial functions and ground-state data");
  add_common(wave, o_wave, true);
  o_wave.format = "json";
  wave->add_option("--state", state, "state selector, e.g. 1s, 2p");
  wave->add_option("--spin", spin, "up or down")->check(CLI::IsMember({"up", "down"}));
  wave->add_option("--theta", theta, "polar angle for the reported spinor");
  wave->add_option("--points", wave_points, "radial samples")->check(CLI::PositiveNumber);

  bool step = false, barrier = false;
  double V0 = 0.5, width = 1.0, E_single = -1.0, E_min = 0.05, E_max = 3.0;
  int scat_points = 100;
  auto* scat = app.add_subcommand("scatter", "step/barrier reflection and transmission");
  add_common(scat, o_scat, true);
  scat->add_flag("--step", step, "step potential");
  scat->add_flag("--barrier", barrier, "rectangular barrier");
  scat->add_option("--V0", V0, "potential height");
  scat->add_option("--width", width, "barrier width");
  scat->add_option("--E", E_single, "single energy (otherwise sweep)");
  scat->add_option("--E-min", E_min, "sweep start");
  scat->add_option("--E-max", E_max, "sweep end");
  scat->add_option("--points", scat_points, "sweep points")->check(CLI::PositiveNumber);

  std::string suite = "all";
  double verify_eps = 1e-3;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "algebra|dispersion|hamiltonian|commutators|coulomb|oracle|all")
      ->check(CLI::IsMember(
          {"algebra", "dispersion", "hamiltonian", "commutators", "coulomb", "oracle", "all"}));
  verify->add_option("--eps", verify_eps, "regulator used by the commutator suite");

  auto* cmp = app.add_subcommand("oracle-compare", "series solver vs shooting oracle");
  add_common(cmp, o_cmp, true);
  cmp->add_option("--n-max", n_max_cmp, "largest principal quantum number")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit() would return its code; force the documented contract
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o_spec, n_max_spec);
    if (wave->parsed()) return cmd_wavefunction(o_wave, state, spin, theta, wave_points);
    if (scat->parsed()) {
      if (step == barrier) {
        std::cerr << "scatter: exactly one of --step / --barrier required\n";
        return 2;
      }
      return cmd_scatter(o_scat, barrier, V0, width, E_single, E_min, E_max, scat_points);
    }
    if (verify->parsed()) return cmd_verify(suite, verify_eps);
    if (cmp->parsed()) return cmd_oracle_compare(o_cmp, n_max_cmp);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

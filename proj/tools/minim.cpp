// minim: construct, evaluate, and verify explicit minimizers of
// attractive-repulsive interaction energies with power-law potentials.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minim/catalog.hpp"
#include "minim/dim_reduction.hpp"
#include "minim/errors.hpp"
#include "minim/io.hpp"
#include "minim/odd_solver.hpp"
#include "minim/oracle.hpp"
#include "minim/potential.hpp"
#include "minim/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;

std::string iso_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct Manifest {
  std::string command;
  json parameters = json::object();
  std::string started = iso_utc_now();
  std::vector<std::string> outputs;

  void write(const fs::path& dir, double tol_in, double tol_out) const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["version"] = kVersion;
    j["tolerances"] = {{"tol_in", minim::fmt17(tol_in)}, {"tol_out", minim::fmt17(tol_out)}};
    j["timestamps"] = {{"started", started}, {"finished", iso_utc_now()}};
    j["outputs"] = outputs;
    minim::write_json_file(dir / "manifest.json", j);
  }
};

struct GlobalOpts {
  std::string out_dir = "out";
  double tol_in = 1e-6;
  double tol_out = 1e-8;
  int grid_n = 512;
  std::uint64_t seed = 0;
};

fs::path ensure_out_dir(const GlobalOpts& g) {
  fs::path dir(g.out_dir);
  fs::create_directories(dir);
  return dir;
}

// builds the minimizer for any supported dimension
struct Solved {
  int d;
  minim::Potential pot;
  minim::RadialDensity rho;
  double R;
  double C0;
  json as_json;
  std::string diagnostics;
};

Solved build_solution(int d, double scan_max, int n_scan) {
  if (d < 1) throw minim::DomainError("solve: requires d >= 1");
  minim::OddSolveOptions opts;
  opts.scan_max = scan_max;
  opts.n_scan = n_scan;
  if (d % 2 == 1) {
    minim::OddSolveDiagnostics diag;
    minim::SeriesSolution sol = minim::solve_odd(d, opts, &diag);
    std::string info;
    for (const auto& cand : diag.candidates)
      info += "root R = " + minim::fmt17(cand.R) +
              (cand.nonnegative ? "  [admissible]\n" : "  [rejected: sign-changing profile]\n");
    return Solved{d,       sol.potential(), sol.density(), sol.R,
                  sol.C0,  minim::solution_to_json(sol), info};
  }
  minim::EvenSolution sol = minim::even_minimizer(d, opts);
  return Solved{d,      sol.potential(), sol.density(), sol.R,
                sol.C0, minim::solution_to_json(sol), ""};
}

int cmd_solve(const GlobalOpts& g, int d, double r_max, double scan_max, int n_scan) {
  const fs::path dir = ensure_out_dir(g);
  Manifest manifest;
  manifest.command = "solve";
  manifest.parameters = {{"d", d},
                         {"r_max", r_max > 0 ? minim::fmt17(r_max) : "2R"},
                         {"scan_max", minim::fmt17(scan_max)},
                         {"n_scan", n_scan},
                         {"grid_n", g.grid_n}};

  Solved sol = build_solution(d, scan_max, n_scan);
  if (!sol.diagnostics.empty()) std::cout << sol.diagnostics;

  const std::string stem = "solution_d" + std::to_string(d);
  const fs::path json_path = dir / (stem + ".json");
  const fs::path csv_path = dir / ("profile_d" + std::to_string(d) + ".csv");
  minim::write_json_file(json_path, sol.as_json);
  const double rmax = r_max > 0 ? r_max : 2.0 * sol.R;
  minim::write_profile_csv(csv_path, sol.pot, sol.rho, rmax, g.grid_n);
  manifest.outputs = {json_path.filename().string(), csv_path.filename().string()};
  manifest.write(dir, g.tol_in, g.tol_out);

  std::cout << "solved d = " << d << ": R = " << minim::fmt17(sol.R)
            << ", C0 = " << minim::fmt17(sol.C0) << "\n"
            << "wrote " << json_path.string() << ", " << csv_path.string() << "\n";
  return kOk;
}

int run_verification(const GlobalOpts& g, const minim::Potential& pot,
                     const minim::RadialDensity& rho, const std::string& stem,
                     double r_ext, int n_interior, int n_exterior) {
  const fs::path dir = ensure_out_dir(g);
  Manifest manifest;
  manifest.command = "verify";
  manifest.parameters = {{"source", stem},
                         {"tol_in", minim::fmt17(g.tol_in)},
                         {"tol_out", minim::fmt17(g.tol_out)},
                         {"n_interior", n_interior},
                         {"n_exterior", n_exterior}};

  minim::ELOptions opts;
  opts.tol_in = g.tol_in;
  opts.tol_out = g.tol_out;
  opts.n_interior = n_interior;
  opts.n_exterior = n_exterior;
  opts.r_ext_max = r_ext;
  const minim::ELReport report = minim::check_euler_lagrange(pot, rho, opts);

  const fs::path report_path = dir / ("elreport_" + stem + ".json");
  minim::write_json_file(report_path, minim::elreport_to_json(report));
  manifest.outputs = {report_path.filename().string()};
  manifest.write(dir, g.tol_in, g.tol_out);

  std::cout << (report.pass ? "PASS" : "FAIL") << ": C0 = " << minim::fmt17(report.C0_estimate)
            << ", interior residual = " << minim::fmt17(report.interior_residual)
            << ", exterior margin = " << minim::fmt17(report.exterior_margin) << "\n"
            << "wrote " << report_path.string() << "\n";
  return report.pass ? kOk : kVerifyFail;
}

int cmd_verify(const GlobalOpts& g, const std::string& input, const std::string& catalog_label,
               double r_ext, int n_interior, int n_exterior) {
  if (!catalog_label.empty()) {
    const minim::CatalogEntry entry = minim::catalog_find(catalog_label);
    return run_verification(g, entry.potential, entry.density, entry.label, r_ext, n_interior,
                            n_exterior);
  }
  const minim::LoadedSolution sol = minim::load_solution_file(input);
  return run_verification(g, sol.potential(), sol.density(), fs::path(input).stem().string(),
                          r_ext, n_interior, n_exterior);
}

int cmd_oracle(const GlobalOpts& g, int d, int n, int max_steps, int bins, double trim) {
  const fs::path dir = ensure_out_dir(g);
  Manifest manifest;
  manifest.command = "oracle";
  manifest.parameters = {{"d", d}, {"n", n},       {"seed", g.seed},
                         {"max_steps", max_steps}, {"bins", bins},  {"trim", minim::fmt17(trim)}};

  // (a, b) = (3, 2-d) for odd d, (3, 1-d) for even d
  const minim::Potential pot(d, 3.0, d % 2 == 1 ? 2.0 - d : 1.0 - d);
  const minim::ParticleConfig cfg = minim::minimize_particles(n, pot, g.seed, max_steps);

  const std::string stem = "oracle_d" + std::to_string(d) + "_n" + std::to_string(n);
  const fs::path points_path = dir / (stem + "_points.csv");
  const fs::path hist_path = dir / (stem + "_histogram.csv");
  const fs::path cmp_path = dir / (stem + "_comparison.json");
  minim::write_points_csv(points_path, cfg);
  minim::write_histogram_csv(hist_path, minim::radial_histogram(cfg, bins));

  const Solved analytic = build_solution(d, 5.0, 512);
  const double e_analytic = minim::energy(analytic.pot, analytic.rho);
  const double r_discrete = minim::support_radius(cfg, trim);
  const double e_discrete = minim::discrete_energy(cfg);

  json cmp;
  cmp["d"] = d;
  cmp["n"] = n;
  cmp["seed"] = g.seed;
  cmp["steps"] = cfg.step_count;
  cmp["grad_max_norm"] = minim::fmt17(cfg.grad_max_norm);
  cmp["support_radius"] = minim::fmt17(r_discrete);
  cmp["analytic_R"] = minim::fmt17(analytic.R);
  cmp["radius_rel_gap"] = minim::fmt17(std::abs(r_discrete - analytic.R) / analytic.R);
  cmp["discrete_energy"] = minim::fmt17(e_discrete);
  cmp["analytic_energy"] = minim::fmt17(e_analytic);
  cmp["energy_rel_gap"] = minim::fmt17(std::abs(e_discrete - e_analytic) / std::abs(e_analytic));
  minim::write_json_file(cmp_path, cmp);

  manifest.outputs = {points_path.filename().string(), hist_path.filename().string(),
                      cmp_path.filename().string()};
  manifest.write(dir, g.tol_in, g.tol_out);

  std::cout << "oracle d = " << d << ", N = " << n << ": support radius "
            << minim::fmt17(r_discrete) << " vs analytic " << minim::fmt17(analytic.R)
            << ", energy " << minim::fmt17(e_discrete) << " vs " << minim::fmt17(e_analytic)
            << "\nwrote " << points_path.string() << ", " << hist_path.string() << ", "
            << cmp_path.string() << "\n";
  return kOk;
}

int cmd_plot_data(const GlobalOpts& g, int d) {
  const fs::path dir = ensure_out_dir(g);
  Manifest manifest;
  manifest.command = "plot-data";
  manifest.parameters = {{"d", d}, {"grid_n", g.grid_n}};

  Solved sol = build_solution(d, 5.0, 512);
  const fs::path csv_path = dir / ("plot_d" + std::to_string(d) + ".csv");
  minim::write_profile_csv(csv_path, sol.pot, sol.rho, 2.0 * sol.R, g.grid_n, sol.C0);
  manifest.outputs = {csv_path.filename().string()};
  manifest.write(dir, g.tol_in, g.tol_out);
  std::cout << "wrote " << csv_path.string() << "\n";
  return kOk;
}

int cmd_catalog_list() {
  for (const minim::CatalogEntry& entry : minim::catalog_entries())
    std::cout << entry.label << "  (d = " << entry.potential.d
              << ", a = " << entry.potential.a << ", b = " << entry.potential.b << ")  "
              << entry.description << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit minimizers of attractive-repulsive interaction energies"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out-dir", g.out_dir, "output directory")->envname("MINIM_OUT_DIR");
  app.add_option("--tol-in", g.tol_in, "interior E-L residual tolerance")
      ->envname("MINIM_TOL_IN");
  app.add_option("--tol-out", g.tol_out, "exterior E-L margin tolerance")
      ->envname("MINIM_TOL_OUT");
  app.add_option("--grid-n", g.grid_n, "points in emitted profile CSVs")
      ->envname("MINIM_GRID_N");
  app.add_option("--seed", g.seed, "seed for the particle oracle")->envname("MINIM_SEED");

  int d = 1, n = 500, max_steps = 2000, n_interior = 64, n_exterior = 64, bins = 20,
      n_scan = 512;
  double r_max = 0.0, r_ext = 0.0, trim = 0.0, scan_max = 5.0;
  std::string input, catalog_label;

  CLI::App* solve = app.add_subcommand("solve", "construct the minimizer for dimension d");
  solve->add_option("--d", d, "dimension")->required();
  solve->add_option("--r-max", r_max, "profile CSV range (default 2R)");
  solve->add_option("--scan-max", scan_max, "determinant root scan upper bound");
  solve->add_option("--n-scan", n_scan, "determinant root scan intervals");

  CLI::App* verify = app.add_subcommand("verify", "Euler-Lagrange check of a solution file");
  verify->add_option("--input", input, "solution JSON produced by solve");
  verify->add_option("--catalog", catalog_label, "catalog label instead of a file");
  verify->add_option("--r-ext", r_ext, "exterior grid upper bound (default 3R)");
  verify->add_option("--n-interior", n_interior, "interior grid size");
  verify->add_option("--n-exterior", n_exterior, "exterior grid size");

  CLI::App* oracle = app.add_subcommand("oracle", "N-particle discrete minimization check");
  oracle->add_option("--d", d, "dimension")->required();
  oracle->add_option("--n", n, "particle count")->required();
  oracle->add_option("--max-steps", max_steps, "descent step cap");
  oracle->add_option("--bins", bins, "histogram bins");
  oracle->add_option("--trim", trim, "support radius quantile trim");

  CLI::App* catalog = app.add_subcommand("catalog", "known explicit minimizers");
  CLI::App* catalog_list = catalog->add_subcommand("list", "list catalog labels");
  CLI::App* catalog_verify = catalog->add_subcommand("verify", "verify a catalog entry");
  std::string catalog_pos;
  catalog_verify->add_option("label", catalog_pos, "catalog label")->required();

  CLI::App* plot = app.add_subcommand("plot-data", "emit (r, rho, W*rho - C0) curves");
  plot->add_option("--d", d, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(g, d, r_max, scan_max, n_scan);
    if (verify->parsed()) {
      if (input.empty() == catalog_label.empty()) {
        std::cerr << "verify: provide exactly one of --input or --catalog\n";
        return kUsage;
      }
      return cmd_verify(g, input, catalog_label, r_ext, n_interior, n_exterior);
    }
    if (oracle->parsed()) return cmd_oracle(g, d, n, max_steps, bins, trim);
    if (catalog->parsed()) {
      if (catalog_list->parsed()) return cmd_catalog_list();
      if (catalog_verify->parsed()) {
        const minim::CatalogEntry entry = minim::catalog_find(catalog_pos);
        return run_verification(g, entry.potential, entry.density, entry.label, r_ext,
                                n_interior, n_exterior);
      }
      std::cerr << "catalog: expected 'list' or 'verify <label>'\n";
      return kUsage;
    }
    if (plot->parsed()) return cmd_plot_data(g, d);
  } catch (const minim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const minim::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

#include "minim/io.hpp"

#include <cstdio>
#include <fstream>

#include "minim/errors.hpp"

namespace minim {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double json_number(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw ParseError("json_number: not a number: '" + s + "'");
    return v;
  }
  if (j.is_number()) return j.get<double>();
  throw ParseError("json_number: expected a number, got " + std::string(j.type_name()));
}

nlohmann::json solution_to_json(const SeriesSolution& sol) {
  nlohmann::json j;
  j["kind"] = "series";
  j["d"] = sol.d;
  j["a"] = fmt17(sol.potential().a);
  j["b"] = fmt17(sol.potential().b);
  j["R"] = fmt17(sol.R);
  nlohmann::json c = nlohmann::json::array();
  for (double ck : sol.c) c.push_back(fmt17(ck));
  j["c"] = c;
  j["norm_const"] = fmt17(sol.norm_const);
  j["C0"] = fmt17(sol.C0);
  j["energy"] = fmt17(sol.energy_value);
  return j;
}

nlohmann::json solution_to_json(const EvenSolution& sol) {
  nlohmann::json j;
  j["kind"] = "projected";
  j["d"] = sol.d;
  j["a"] = fmt17(sol.potential().a);
  j["b"] = fmt17(sol.potential().b);
  j["lambda"] = fmt17(sol.lambda);
  j["R"] = fmt17(sol.R);
  j["C0"] = fmt17(sol.C0);
  j["energy"] = fmt17(sol.energy_value);
  j["source"] = solution_to_json(sol.source);
  return j;
}

int LoadedSolution::dim() const {
  return std::visit([](const auto& s) { return s.d; }, value);
}

Potential LoadedSolution::potential() const {
  return std::visit([](const auto& s) { return s.potential(); }, value);
}

RadialDensity LoadedSolution::density() const {
  return std::visit([](const auto& s) { return s.density(); }, value);
}

double LoadedSolution::stored_C0() const {
  return std::visit([](const auto& s) { return s.C0; }, value);
}

namespace {

SeriesSolution series_from_json(const nlohmann::json& j) {
  SeriesSolution sol;
  sol.d = j.at("d").get<int>();
  sol.R = json_number(j.at("R"));
  for (const auto& ck : j.at("c")) sol.c.push_back(json_number(ck));
  sol.norm_const = json_number(j.at("norm_const"));
  sol.C0 = json_number(j.at("C0"));
  if (j.contains("energy")) sol.energy_value = json_number(j.at("energy"));
  if (sol.d < 1 || sol.d % 2 == 0) throw ParseError("series solution: d must be odd");
  if (!(sol.R > 0.0)) throw ParseError("series solution: R must be positive");
  if (sol.c.size() != static_cast<std::size_t>((sol.d + 1) / 2))
    throw ParseError("series solution: expected (d+1)/2 coefficients");
  sol.basis = std::make_shared<SeriesBasis>(sol.d, std::max(5.0, 4.0 * sol.R));
  return sol;
}

}  // namespace

LoadedSolution solution_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "series") return LoadedSolution{series_from_json(j)};
    if (kind == "projected") {
      const SeriesSolution src = series_from_json(j.at("source"));
      EvenSolution sol = make_even_solution(src, /*compute_energy=*/false);
      // stored values describe the file, not a recomputation
      sol.C0 = json_number(j.at("C0"));
      if (j.contains("energy")) sol.energy_value = json_number(j.at("energy"));
      return LoadedSolution{std::move(sol)};
    }
    throw ParseError("solution_from_json: unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solution_from_json: ") + e.what());
  }
}

LoadedSolution load_solution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return solution_from_json(j);
}

nlohmann::json elreport_to_json(const ELReport& report) {
  nlohmann::json j;
  j["C0_estimate"] = fmt17(report.C0_estimate);
  j["interior_residual"] = fmt17(report.interior_residual);
  j["exterior_margin"] = fmt17(report.exterior_margin);
  auto grid = [](const std::vector<double>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : v) arr.push_back(fmt17(x));
    return arr;
  };
  j["interior_grid"] = grid(report.interior_grid);
  j["exterior_grid"] = grid(report.exterior_grid);
  j["interior_values"] = grid(report.interior_values);
  j["exterior_values"] = grid(report.exterior_values);
  j["tol_in"] = fmt17(report.tol_in);
  j["tol_out"] = fmt17(report.tol_out);
  j["pass"] = report.pass;
  return j;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

void write_profile_csv(const std::filesystem::path& path, const Potential& p,
                       const RadialDensity& rho, double r_max, int n,
                       double subtract_constant) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << (subtract_constant == 0.0 ? "r,rho,conv\n" : "r,rho,conv_minus_C0\n");
  const bool shell = rho.kind() == RadialDensity::Kind::kShell;
  for (int i = 0; i < n; ++i) {
    const double r = r_max * i / (n - 1);
    const double value = shell ? 0.0 : rho(r);
    const double field = convolve(p, rho, r) - subtract_constant;
    out << fmt17(r) << "," << fmt17(value) << "," << fmt17(field) << "\n";
  }
}

void write_points_csv(const std::filesystem::path& path, const ParticleConfig& cfg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  for (int k = 0; k < cfg.d; ++k) out << (k ? "," : "") << "x" << k;
  out << "\n";
  for (int i = 0; i < cfg.count(); ++i) {
    for (int k = 0; k < cfg.d; ++k)
      out << (k ? "," : "") << fmt17(cfg.points[i * cfg.d + k]);
    out << "\n";
  }
}

void write_histogram_csv(const std::filesystem::path& path,
                         const std::vector<std::pair<double, double>>& hist) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << "r,density\n";
  for (const auto& [center, density] : hist)
    out << fmt17(center) << "," << fmt17(density) << "\n";
}

}  // namespace minim

#ifndef MINIM_IO_HPP
#define MINIM_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "minim/dim_reduction.hpp"
#include "minim/odd_solver.hpp"
#include "minim/oracle.hpp"
#include "minim/verify.hpp"

namespace minim {

// 17 significant digits; round-trips every double exactly.
std::string fmt17(double x);

// Accepts both our decimal-string encoding and plain JSON numbers.
double json_number(const nlohmann::json& j);

nlohmann::json solution_to_json(const SeriesSolution& sol);
nlohmann::json solution_to_json(const EvenSolution& sol);

// A solution reconstructed from disk: enough to re-verify it.
struct LoadedSolution {
  std::variant<SeriesSolution, EvenSolution> value;

  int dim() const;
  Potential potential() const;
  RadialDensity density() const;
  double stored_C0() const;
};

LoadedSolution solution_from_json(const nlohmann::json& j);
LoadedSolution load_solution_file(const std::filesystem::path& path);

nlohmann::json elreport_to_json(const ELReport& report);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

// CSV emitters: comma separated, header row, LF line endings, %.17g numbers.
void write_profile_csv(const std::filesystem::path& path, const Potential& p,
                       const RadialDensity& rho, double r_max, int n,
                       double subtract_constant = 0.0);
void write_points_csv(const std::filesystem::path& path, const ParticleConfig& cfg);
void write_histogram_csv(const std::filesystem::path& path,
                         const std::vector<std::pair<double, double>>& hist);

}  // namespace minim

#endif  // MINIM_IO_HPP

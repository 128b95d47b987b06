#include "minim/dim_reduction.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "minim/errors.hpp"

namespace minim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTableSize = 2048;

}  // namespace

double eta(int d, double a) {
  if (d < 1) throw DomainError("eta: requires d >= 1");
  if (!(a > -static_cast<double>(d))) throw DomainError("eta: requires a > -d");
  return gamma_fn(0.5 * (a + d)) * gamma_fn(0.5 * (d + 1)) /
         (gamma_fn(0.5 * (a + d + 1)) * gamma_fn(0.5 * d));
}

double c_log(int d) {
  if (d < 1) throw DomainError("c_log: requires d >= 1");
  auto f = [d](double phi) {
    const double s = std::sin(phi);
    return std::pow(s, d - 1.0) * std::log(s);
  };
  const double integral = 2.0 * integrate_graded(f, 0.0, 0.5 * kPi, true, false, 48, 16);
  return sphere_area(d) / sphere_area(d + 1) * integral;
}

double q_average(const std::function<double(double)>& w, int d, double r) {
  if (d < 1) throw DomainError("q_average: requires d >= 1");
  if (r < 0.0) throw DomainError("q_average: requires r >= 0");
  if (r == 0.0) return w(0.0);  // every line passes through the origin
  auto f = [&](double phi) {
    const double s = std::sin(phi);
    return w(r * s) * std::pow(s, d - 1.0);
  };
  const double integral = 2.0 * integrate_graded(f, 0.0, 0.5 * kPi, true, false, 48, 16);
  const double value = sphere_area(d) / sphere_area(d + 1) * integral;
  if (!std::isfinite(value)) throw DomainError("q_average: divergent integrand");
  return value;
}

namespace {

// smooth part of the projection: P[rho](z) = (R - z)^{1/2} g(z) with
// g(z) = 2 sqrt(R + z) * integral over psi of u(sqrt(z^2 + h^2 sin^2 psi)) cos psi,
// via the substitution t = h sin(psi), h = sqrt(R^2 - z^2).
double projection_smooth(const RadialDensity& rho, double z, const QuadratureRule& rule) {
  const double R = rho.support_radius();
  const double h2 = std::max(0.0, (R - z) * (R + z));
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = std::sin(rule.nodes[i]);
    const double arg = std::min(R, std::sqrt(z * z + h2 * s * s));
    acc += rule.weights[i] * rho(arg) * std::cos(rule.nodes[i]);
  }
  return 2.0 * std::sqrt(R + z) * acc;
}

}  // namespace

RadialDensity project(const RadialDensity& rho) {
  if (rho.kind() != RadialDensity::Kind::kProfile)
    throw UnsupportedKindError("project: shell densities cannot be projected");
  if (rho.dim() < 2) throw DomainError("project: source dimension must be at least 2");
  if (rho.edge_exponent() != 0.0)
    throw DomainError("project: only regular (edge exponent 0) profiles are supported");

  const int d = rho.dim() - 1;
  const double R = rho.support_radius();
  const QuadratureRule rule = gauss_legendre(64, 0.0, 0.5 * kPi);
  auto src = rho;
  return RadialDensity::profile(
      d, R, [src, rule](double z) { return projection_smooth(src, z, rule); }, 0.5);
}

double lambda_even(int d) {
  if (d < 2 || d % 2 != 0) throw DomainError("lambda_even: requires even d >= 2");
  return std::pow(gamma_fn(0.5 * (3.0 + d)) / (gamma_fn(0.5 * (4.0 + d)) * std::sqrt(kPi)),
                  1.0 / (d + 2.0));
}

RadialDensity EvenSolution::density() const {
  const PchipInterpolant t = table;
  return RadialDensity::profile(d, R, [t](double r) { return t(r); }, 0.5);
}

RadialDensity EvenSolution::density_direct() const {
  const SeriesSolution src = source;
  const double lam = lambda;
  const double scale = std::pow(lam, d + 0.5);
  const QuadratureRule rule = gauss_legendre(64, 0.0, 0.5 * kPi);
  auto smooth = [src, lam, scale, rule](double r) {
    const RadialDensity rho = src.density();
    return scale * projection_smooth(rho, std::min(lam * r, src.R), rule);
  };
  return RadialDensity::profile(d, R, smooth, 0.5);
}

EvenSolution make_even_solution(const SeriesSolution& source, bool compute_energy) {
  if (source.d < 3 || source.d % 2 == 0)
    throw DomainError("make_even_solution: source must be an odd solution with d >= 3");
  EvenSolution sol;
  sol.d = source.d - 1;
  sol.source = source;
  sol.lambda = lambda_even(sol.d);
  sol.R = source.R / sol.lambda;

  const RadialDensity src_rho = source.density();
  const QuadratureRule rule = gauss_legendre(64, 0.0, 0.5 * kPi);
  const double scale = std::pow(sol.lambda, sol.d + 0.5);
  const double dx = sol.R / (kTableSize - 1);
  std::vector<double> samples(kTableSize);
  for (int i = 0; i < kTableSize; ++i) {
    const double z = std::min(sol.lambda * (dx * i), source.R);
    samples[i] = scale * projection_smooth(src_rho, z, rule);
  }
  sol.table = PchipInterpolant(0.0, dx, std::move(samples));

  const RadialDensity rho = sol.density();
  sol.C0 = convolve(sol.potential(), rho, 0.0);
  sol.energy_value = compute_energy ? energy(sol.potential(), rho) : 0.0;
  return sol;
}

EvenSolution even_minimizer(int d, const OddSolveOptions& opts) {
  if (d < 2 || d % 2 != 0) throw DomainError("even_minimizer: requires even d >= 2");
  return make_even_solution(solve_odd(d + 1, opts), opts.compute_energy);
}

}  // namespace minim

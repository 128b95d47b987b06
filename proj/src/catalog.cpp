#include "minim/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "minim/errors.hpp"
#include "minim/numerics.hpp"

namespace minim {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

CatalogEntry quadratic_attraction(int d, double b) {
  if (d < 1) throw DomainError("quadratic_attraction: requires d >= 1");
  const double b_hi = std::min(4.0 - d, 2.0);
  if (!(b > -static_cast<double>(d) && b < b_hi))
    throw DomainError("quadratic_attraction: requires -d < b < min(4-d, 2), got b = " +
                      fmt_param(b));

  const double q = 1.0 - 0.5 * (b + d);  // edge exponent; 0 at b = 2 - d
  const double R =
      std::pow(gamma_fn(0.5 * (4.0 - b)) * gamma_fn(0.5 * (b + d)) / gamma_fn(0.5 * (2.0 + d)),
               1.0 / (2.0 - b));
  // unit mass via the Beta integral of (R^2 - r^2)^q r^{d-1}
  const double C =
      2.0 / (sphere_area(d) * std::pow(R, 2.0 * q + d) * beta_fn(0.5 * d, q + 1.0));

  auto smooth = [C, R, q](double r) { return C * std::pow(R + r, q); };
  CatalogEntry entry{
      (q == 0.0 ? "uniform-ball" : "quadratic") + std::string("-d") + std::to_string(d) + "-b" +
          fmt_param(b),
      "quadratic attraction minimizer, density C (R^2 - |x|^2)^" + fmt_param(q),
      "-d < b < min(4-d, 2), a = 2",
      Potential(d, 2.0, b),
      RadialDensity::profile(d, R, smooth, q)};
  return entry;
}

double shell_boundary_b(int d, double a) {
  return (-10.0 + 3.0 * a + 7.0 * d - a * d - static_cast<double>(d) * d) / (d + a - 3.0);
}

CatalogEntry sphere_shell(int d, double a, double b) {
  if (d < 2) throw DomainError("sphere_shell: requires d >= 2");
  if (a == 4.0 && b == 2.0)
    throw ExcludedCaseError("sphere_shell: (a, b) = (4, 2) has infinitely many minimizers");
  if (!(a >= 2.0 && a <= 4.0)) throw DomainError("sphere_shell: requires 2 <= a <= 4");
  if (!(b < a)) throw DomainError("sphere_shell: requires b < a");
  const double b_lo = shell_boundary_b(d, a);
  if (!(b >= b_lo && b <= 2.0))
    throw DomainError("sphere_shell: requires b_*(a) = " + fmt_param(b_lo) + " <= b <= 2");
  if (!(d + b - 1.0 > 0.0 && 2.0 * d + b - 2.0 > 0.0))
    throw DomainError("sphere_shell: radius formula undefined for b = " + fmt_param(b));

  const double R = 0.5 * std::pow(gamma_fn(0.5 * (d + b - 1.0)) * gamma_fn(0.5 * (2.0 * d + a - 2.0)) /
                                      (gamma_fn(0.5 * (d + a - 1.0)) *
                                       gamma_fn(0.5 * (2.0 * d + b - 2.0))),
                                  1.0 / (a - b));
  CatalogEntry entry{"sphere-shell-d" + std::to_string(d) + "-a" + fmt_param(a) + "-b" +
                         fmt_param(b),
                     "uniform distribution on the sphere of radius " + fmt_param(R),
                     "d >= 2, 2 <= a <= 4, b_*(a) <= b <= 2, b < a, (a,b) != (4,2)",
                     Potential(d, a, b), RadialDensity::shell(d, R, 1.0)};
  return entry;
}

CatalogEntry frank_interval(double a) {
  if (!(a > 2.0 && a < 3.0)) throw DomainError("frank_interval: requires 2 < a < 3");
  const double q = -0.5 * (a - 1.0);  // in (-1, -3/4..-1/2); singular but integrable edge
  const double R = std::pow(std::sqrt(kPi) * gamma_fn(0.5 * (3.0 - a)) *
                                std::sin(0.5 * (a - 1.0) * kPi) /
                                (gamma_fn(0.5 * (4.0 - a)) * (a - 1.0) * kPi),
                            1.0 / (a - 2.0));
  const double C = 1.0 / (std::pow(R, 2.0 * q + 1.0) * beta_fn(0.5, q + 1.0));
  auto smooth = [C, R, q](double r) { return C * std::pow(R + r, q); };
  CatalogEntry entry{"frank-a" + fmt_param(a),
                     "interval minimizer with (R^2 - x^2)^" + fmt_param(q) + " profile",
                     "d = 1, b = 2, 2 < a < 3", Potential(1, a, 2.0),
                     RadialDensity::profile(1, R, smooth, q)};
  return entry;
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      quadratic_attraction(3, -1.0),  // uniform unit ball, Newtonian repulsion
      quadratic_attraction(2, 0.0),   // uniform unit disk, logarithmic repulsion
      quadratic_attraction(1, 1.0),   // uniform unit interval
      sphere_shell(3, 2.0, 1.0),      // boundary case b = b_*(2)
      frank_interval(2.5),
  };
}

CatalogEntry catalog_find(const std::string& label) {
  for (CatalogEntry& entry : catalog_entries())
    if (entry.label == label) return entry;

  int d = 0;
  double a = 0.0, b = 0.0;
  if (std::sscanf(label.c_str(), "uniform-ball-d%d-b%lf", &d, &b) == 2 ||
      std::sscanf(label.c_str(), "quadratic-d%d-b%lf", &d, &b) == 2)
    return quadratic_attraction(d, b);
  if (std::sscanf(label.c_str(), "sphere-shell-d%d-a%lf-b%lf", &d, &a, &b) == 3)
    return sphere_shell(d, a, b);
  if (std::sscanf(label.c_str(), "frank-a%lf", &a) == 1) return frank_interval(a);
  throw DomainError("catalog_find: unknown label '" + label + "'");
}

}  // namespace minim

#include "minim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minim/errors.hpp"

namespace minim {

namespace {

// equality is an a.e. statement; stay a hair inside the support edge
constexpr double kEdgeOffset = 1e-4;

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

ELReport check_euler_lagrange(const Potential& p, const RadialDensity& rho,
                              const ELOptions& opts) {
  if (p.d != rho.dim())
    throw DomainError("check_euler_lagrange: potential and density dimensions differ");
  if (opts.n_interior < 1 || opts.n_exterior < 2)
    throw DomainError("check_euler_lagrange: grid sizes too small");

  const double R = rho.support_radius();
  const double r_ext = opts.r_ext_max > 0.0 ? opts.r_ext_max : 3.0 * R;
  if (!(r_ext > R)) throw DomainError("check_euler_lagrange: r_ext_max must exceed R");

  ELReport report;
  report.tol_in = opts.tol_in;
  report.tol_out = opts.tol_out;

  const bool shell = rho.kind() == RadialDensity::Kind::kShell;
  if (shell) {
    report.interior_grid = {R};
    // the inequality also holds inside the open ball bounded by the shell
    const int n_in = opts.n_exterior / 2;
    for (int i = 0; i < n_in; ++i)
      report.exterior_grid.push_back(R * (1.0 - kEdgeOffset) * i / n_in);
    const int n_out = opts.n_exterior - n_in;
    const double lo = R * (1.0 + kEdgeOffset);
    for (int i = 0; i < n_out; ++i)
      report.exterior_grid.push_back(lo + (r_ext - lo) * i / (n_out - 1));
  } else {
    const double hi = R * (1.0 - kEdgeOffset);
    const int n = opts.n_interior;
    for (int i = 0; i < n; ++i)
      report.interior_grid.push_back(n == 1 ? hi : hi * i / (n - 1));
    const double lo = R * (1.0 + kEdgeOffset);
    for (int i = 0; i < opts.n_exterior; ++i)
      report.exterior_grid.push_back(lo + (r_ext - lo) * i / (opts.n_exterior - 1));
  }

  for (double r : report.interior_grid)
    report.interior_values.push_back(convolve(p, rho, r));
  for (double r : report.exterior_grid)
    report.exterior_values.push_back(convolve(p, rho, r));

  report.C0_estimate = median_of(report.interior_values);

  double residual = 0.0;
  for (double v : report.interior_values)
    residual = std::max(residual, std::abs(v - report.C0_estimate));
  report.interior_residual = residual / std::abs(report.C0_estimate);

  double margin = std::numeric_limits<double>::infinity();
  for (double v : report.exterior_values) margin = std::min(margin, v - report.C0_estimate);
  report.exterior_margin = margin;

  report.pass = report.interior_residual <= opts.tol_in && report.exterior_margin >= -opts.tol_out;
  return report;
}

ELReport check_euler_lagrange(const Potential& p, const RadialDensity& rho, double tol_in,
                              double tol_out, int n_interior, double r_ext_max) {
  ELOptions opts;
  opts.tol_in = tol_in;
  opts.tol_out = tol_out;
  opts.n_interior = n_interior;
  opts.r_ext_max = r_ext_max;
  return check_euler_lagrange(p, rho, opts);
}

double c0_identity_check(const Potential& p, const RadialDensity& rho) {
  const ELReport report = check_euler_lagrange(p, rho);
  const double e = energy(p, rho);
  return std::abs(report.C0_estimate - 2.0 * e) / std::abs(report.C0_estimate);
}

}  // namespace minim

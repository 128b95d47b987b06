// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "minim/catalog.hpp"
#include "minim/dim_reduction.hpp"
#include "minim/numerics.hpp"
#include "minim/odd_solver.hpp"
#include "minim/oracle.hpp"
#include "minim/potential.hpp"
#include "minim/verify.hpp"

using namespace minim;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kR1 = 0.848300901770900;
constexpr double kR3 = 0.921238965647461;
constexpr double kR2 = 1.177238568926828;
constexpr double kBeta = 1.1892071150027210667;

int g_failures = 0;

struct Criterion {
  std::string detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void expect_le(double value, double bound, const std::string& what) {
    expect(value <= bound, what + " = " + std::to_string(value) + " exceeds " +
                               std::to_string(bound));
  }
};

void report(int index, const std::string& title, const Criterion& c, double seconds) {
  std::printf("[%s] criterion %2d: %-38s (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", index,
              title.c_str(), seconds, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++g_failures;
}

// mass-preserving dilation: the 5 % negative control
RadialDensity dilate(const RadialDensity& rho, double factor) {
  const double scale = std::pow(factor, -rho.dim() - rho.edge_exponent());
  auto base = rho;
  return RadialDensity::profile(
      rho.dim(), factor * rho.support_radius(),
      [base, factor, scale](double r) { return scale * base.smooth_part(r / factor); },
      rho.edge_exponent());
}

}  // namespace

int main() {
  const auto t_all = Clock::now();

  // --- shared constructions -------------------------------------------------
  auto tick = Clock::now();
  auto elapsed = [&tick]() {
    const double s = std::chrono::duration<double>(Clock::now() - tick).count();
    tick = Clock::now();
    return s;
  };

  const SeriesSolution s1 = solve_odd(1);
  const SeriesSolution c1 = closed_form(1);
  const double t_d1 = elapsed();

  const SeriesSolution s3 = solve_odd(3);
  const double t_d3 = elapsed();

  const EvenSolution e2 = make_even_solution(s3);
  const double t_d2 = elapsed();

  const SeriesSolution s5 = solve_odd(5);
  const EvenSolution e4 = make_even_solution(s5);
  elapsed();

  // --- 1: d = 1 radius --------------------------------------------------------
  {
    Criterion c;
    c.expect_le(std::abs(s1.R - kR1), 1e-12, "|solve_odd(1).R - R1|");
    c.expect_le(std::abs(c1.R - kR1), 1e-12, "|closed_form(1).R - R1|");
    c.expect_le(t_d1, 1.0, "runtime (s)");
    report(1, "d = 1 support radius", c, t_d1);
  }

  // --- 2: d = 3 radius, determinant, null vector ------------------------------
  {
    Criterion c;
    c.expect_le(std::abs(s3.R - kR3), 1e-12, "|solve_odd(3).R - R3|");
    for (double R : {0.0, 0.25, 0.5, 0.75, 1.0})
      c.expect_le(std::abs(det_M(3, R) - det_M_elementary_d3(R)), 1e-10,
                  "det M mismatch at R = " + std::to_string(R));
    const double want =
        std::numbers::sqrt2 / 3.0 * std::tan(kBeta * s3.R) * std::tanh(kBeta * s3.R);
    c.expect_le(std::abs(s3.c[1] / s3.c[0] - want), 1e-10, "|c2/c0 - ratio|");
    c.expect_le(t_d3, 5.0, "runtime (s)");
    report(2, "d = 3 radius and null vector", c, t_d3);
  }

  // --- 3: d = 2 construction ---------------------------------------------------
  {
    Criterion c;
    c.expect_le(std::abs(e2.lambda - std::pow(3.0 / 8.0, 0.25)), 1e-14,
                "|lambda - (3/8)^(1/4)|");
    c.expect_le(std::abs(e2.R - kR2), 1e-11, "|R2 - tabulated|");
    c.expect_le(t_d2, 10.0, "runtime (s)");
    report(3, "d = 2 projection and rescaling", c, t_d2);
  }

  // --- 4: Euler-Lagrange suite -------------------------------------------------
  {
    Criterion c;
    struct Case {
      std::string name;
      Potential pot;
      RadialDensity rho;
    };
    const std::vector<Case> cases = {
        {"d1", s1.potential(), s1.density()},   {"d2", e2.potential(), e2.density()},
        {"d3", s3.potential(), s3.density()},   {"d4", e4.potential(), e4.density()},
        {"d5", s5.potential(), s5.density()},
    };
    for (const Case& cs : cases) {
      const ELReport rep = check_euler_lagrange(cs.pot, cs.rho, 1e-6, 1e-8, 64, 0.0);
      c.expect_le(rep.interior_residual, 1e-6, cs.name + " interior residual");
      c.expect(rep.exterior_margin >= -1e-8, cs.name + " exterior margin");
      for (double factor : {0.95, 1.05}) {
        const ELReport bad =
            check_euler_lagrange(cs.pot, dilate(cs.rho, factor), 1e-6, 1e-8, 64, 0.0);
        c.expect(bad.interior_residual >= 1e-3,
                 cs.name + " perturbed control passed unexpectedly");
      }
    }
    const double t = elapsed();
    c.expect_le(t, 120.0, "runtime (s)");
    report(4, "Euler-Lagrange suite d = 1..5", c, t);
  }

  // --- 5: moment conditions ----------------------------------------------------
  {
    Criterion c;
    for (const SeriesSolution* sol : {&s1, &s3, &s5}) {
      const RadialDensity rho = sol->density();
      for (int k = 0; k <= (sol->d - 1) / 2; ++k) {
        const double lhs = coef_A(sol->d, k) * convolve_power(1.0 - 2 * k, rho, 0.0);
        const double rhs =
            sphere_area(sol->d) * sol->norm_const * sol->c[k] * coef_D(sol->d, k);
        c.expect_le(std::abs(lhs - rhs) / std::abs(rhs), 1e-8,
                    "d = " + std::to_string(sol->d) + ", k = " + std::to_string(k));
      }
    }
    report(5, "moment conditions at the origin", c, elapsed());
  }

  // --- 6: C0 identity -----------------------------------------------------------
  {
    Criterion c;
    auto check_id = [&](const std::string& name, double C0, double e) {
      c.expect_le(std::abs(C0 - 2.0 * e) / std::abs(C0), 1e-6, name);
    };
    check_id("d1", s1.C0, s1.energy_value);
    check_id("d2", e2.C0, e2.energy_value);
    check_id("d3", s3.C0, s3.energy_value);
    check_id("d4", e4.C0, e4.energy_value);
    check_id("d5", s5.C0, s5.energy_value);
    for (const CatalogEntry& entry : catalog_entries()) {
      const ELReport rep = check_euler_lagrange(entry.potential, entry.density);
      check_id(entry.label, rep.C0_estimate, energy(entry.potential, entry.density));
    }
    report(6, "C0 = 2 E on every minimizer", c, elapsed());
  }

  // --- 7: spherical-average identities ------------------------------------------
  {
    Criterion c;
    for (int d : {1, 2, 3}) {
      for (double a : {-1.0, 1.0, 2.0, 3.0}) {
        if (!(a > -static_cast<double>(d))) continue;  // outside the domain of eta
        for (double r : {0.35, 0.8, 1.6}) {
          const double got = q_average([a](double t) { return std::pow(t, a) / a; }, d, r);
          const double want = eta(d, a) * std::pow(r, a) / a;
          c.expect_le(std::abs(got - want) / std::abs(want), 1e-7,
                      "power a = " + std::to_string(a) + ", d = " + std::to_string(d));
        }
      }
      for (double r : {0.35, 0.8, 1.6}) {
        const double got = q_average([](double t) { return std::log(t); }, d, r);
        c.expect_le(std::abs(got - (std::log(r) + c_log(d))), 1e-7,
                    "log case, d = " + std::to_string(d));
      }
    }
    c.expect_le(std::abs(c_log(1) + std::numbers::ln2), 1e-9, "|C_{1,ln} + ln 2|");
    report(7, "spherical-average identities", c, elapsed());
  }

  // --- 8: catalog cross-validation ----------------------------------------------
  {
    Criterion c;
    const std::vector<std::pair<std::string, double>> expected_radii = {
        {"uniform-ball-d3-b-1", 1.0},
        {"uniform-ball-d2-b0", 1.0},
        {"sphere-shell-d3-a2-b1", 2.0 / 3.0},
    };
    for (const auto& [label, R] : expected_radii)
      c.expect_le(std::abs(catalog_find(label).density.support_radius() - R), 1e-12,
                  label + " radius");
    for (const std::string label :
         {"uniform-ball-d3-b-1", "uniform-ball-d2-b0", "sphere-shell-d3-a2-b1",
          "frank-a2.5"}) {
      const CatalogEntry entry = catalog_find(label);
      const ELReport rep = check_euler_lagrange(entry.potential, entry.density);
      c.expect(rep.pass, label + " failed verification");
    }
    report(8, "catalog cross-validation", c, elapsed());
  }

  // --- 9: particle-oracle concordance --------------------------------------------
  {
    Criterion c;
    const ParticleConfig p1 = minimize_particles(500, Potential(1, 3.0, 1.0), 0, 4000);
    c.expect_le(std::abs(support_radius(p1) - kR1) / kR1, 0.03, "d1 radius gap");
    c.expect_le(std::abs(discrete_energy(p1) - s1.energy_value) / std::abs(s1.energy_value),
                0.01, "d1 energy gap");
    const ParticleConfig p2 = minimize_particles(800, Potential(2, 3.0, -1.0), 0, 4000);
    c.expect_le(std::abs(support_radius(p2) - kR2) / kR2, 0.04, "d2 radius gap");
    const double t = elapsed();
    c.expect_le(t, 180.0, "runtime (s)");
    report(9, "particle oracle concordance", c, t);
  }

  // --- 10: series vs elementary forms ---------------------------------------------
  {
    Criterion c;
    const SeriesBasis b1(1, 5.0), b3(3, 5.0);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double r1 = 2.0 * kR1 * i / 200;
      worst = std::max(worst,
                       std::abs(b1.eval(0, r1) - std::cosh(std::numbers::sqrt2 * r1)));
      const double r3 = 2.0 * kR3 * i / 200;
      worst = std::max(worst, std::abs(b3.eval(0, r3) - u0_elementary_d3(r3)));
      worst = std::max(worst, std::abs(b3.eval(1, r3) - u2_elementary_d3(r3)));
    }
    c.expect_le(worst, 1e-11, "max series/elementary deviation");
    report(10, "series matches elementary forms", c, elapsed());
  }

  const double total = std::chrono::duration<double>(Clock::now() - t_all).count();
  std::printf("%d of 10 criteria passed (total %.1f s)\n", 10 - g_failures, total);
  return g_failures == 0 ? 0 : 1;
}

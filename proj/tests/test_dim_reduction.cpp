#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minim/dim_reduction.hpp"
#include "minim/errors.hpp"
#include "minim/numerics.hpp"
#include "minim/odd_solver.hpp"
#include "minim/potential.hpp"
#include "minim/verify.hpp"

using namespace minim;

namespace {

constexpr double kPi = std::numbers::pi;

const SeriesSolution& solved3() {
  static const SeriesSolution sol = solve_odd(3);
  return sol;
}

const EvenSolution& even2() {
  static const EvenSolution sol = make_even_solution(solved3());
  return sol;
}

}  // namespace

TEST_CASE("eta gamma-ratio identities") {
  for (int d : {1, 2, 3, 5}) CHECK(eta(d, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // eta_{d,2} = d / (d + 1) by the Gamma recurrence
  for (int d : {1, 2, 3, 4, 7})
    CHECK(eta(d, 2.0) == doctest::Approx(d / (d + 1.0)).epsilon(1e-13));
  // the d = 2 rescaling constant
  CHECK(std::pow(eta(2, 3.0) / eta(2, -1.0), 0.25) ==
        doctest::Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-14));
  CHECK_THROWS_AS(eta(1, -1.0), DomainError);
  CHECK_THROWS_AS(eta(2, -2.5), DomainError);
}

TEST_CASE("c_log values and sign") {
  // (1/pi) * integral of ln sin = -ln 2
  CHECK(std::abs(c_log(1) + std::numbers::ln2) <= 1e-9);
  for (int d = 1; d <= 6; ++d) CHECK(c_log(d) < 0.0);
}

TEST_CASE("c_log is stable under quadrature refinement") {
  // self-convergence: recompute with an independent finer rule
  const double reference = c_log(2);
  auto f = [](double phi) { return std::sin(phi) * std::log(std::sin(phi)); };
  const double finer =
      sphere_area(2) / sphere_area(3) * 2.0 *
      integrate_graded(f, 0.0, 0.5 * kPi, true, false, 60, 24);
  CHECK(std::abs(reference - finer) <= 1e-10);
}

TEST_CASE("q_average of power laws reproduces the eta constants") {
  std::mt19937_64 rng(17);
  for (int d : {1, 2, 3}) {
    for (double a : {-1.0, 1.0, 2.0, 3.0}) {
      if (!(a > -static_cast<double>(d))) continue;
      for (int trial = 0; trial < 10; ++trial) {
        const double r = 0.1 + 2.4 * (rng() % 1000) / 1000.0;
        const double got = q_average(
            [a](double t) { return std::pow(t, a) / a; }, d, r);
        const double want = eta(d, a) * std::pow(r, a) / a;
        CHECK(std::abs(got - want) <= 1e-7 * std::abs(want));
      }
    }
  }
}

TEST_CASE("q_average of the logarithm shifts by c_log") {
  for (int d : {1, 2, 3}) {
    const double cd = c_log(d);
    for (double r : {0.3, 1.0, 1.7}) {
      const double got = q_average([](double t) { return std::log(t); }, d, r);
      CHECK(std::abs(got - (std::log(r) + cd)) <= 1e-8);
    }
  }
}

TEST_CASE("q_average at the origin returns w(0)") {
  CHECK(q_average([](double t) { return 3.5 + t * t; }, 2, 0.0) == 3.5);
}

TEST_CASE("projecting the uniform disk gives the chord profile") {
  const RadialDensity disk =
      RadialDensity::profile(2, 1.0, [](double) { return 1.0 / kPi; });
  const RadialDensity chord = project(disk);
  CHECK(chord.dim() == 1);
  CHECK(chord.support_radius() == 1.0);
  CHECK(chord.edge_exponent() == 0.5);
  for (double x : {0.0, 0.3, 0.7, 0.95})
    CHECK(chord(x) == doctest::Approx(2.0 / kPi * std::sqrt(1.0 - x * x)).epsilon(1e-12));
  CHECK(chord.mass() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("project rejects shells and singular-edge profiles") {
  CHECK_THROWS_AS(project(RadialDensity::shell(3, 1.0)), UnsupportedKindError);
  const RadialDensity singular =
      RadialDensity::profile(2, 1.0, [](double) { return 1.0; }, -0.25);
  CHECK_THROWS_AS(project(singular), DomainError);
}

TEST_CASE("projection of the d = 3 minimizer preserves mass") {
  const RadialDensity projected = project(solved3().density());
  CHECK(projected.mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lambda formula agrees with the eta-ratio form") {
  for (int d : {2, 4, 6, 8, 10}) {
    const double via_eta =
        std::pow(eta(d, 3.0) / eta(d, 1.0 - d), 1.0 / (d + 2.0));
    CHECK(lambda_even(d) == doctest::Approx(via_eta).epsilon(1e-14));
  }
  CHECK(lambda_even(2) == doctest::Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-15));
  CHECK_THROWS_AS(lambda_even(3), DomainError);
}

TEST_CASE("even minimizer in d = 2 matches the tabulated radius") {
  const EvenSolution& sol = even2();
  CHECK(std::abs(sol.lambda - std::pow(3.0 / 8.0, 0.25)) <= 1e-14);
  CHECK(std::abs(sol.R - 1.177238568926828) <= 1e-11);
  CHECK(sol.density().mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tabulated evaluator agrees with direct projection quadrature") {
  const EvenSolution& sol = even2();
  const RadialDensity fast = sol.density();
  const RadialDensity direct = sol.density_direct();
  for (int i = 0; i <= 24; ++i) {
    const double r = sol.R * i / 24.0;
    CHECK(std::abs(fast(r) - direct(r)) <= 1e-8);
  }
}

TEST_CASE("projection value at the origin against a Riemann oracle") {
  const RadialDensity rho3 = solved3().density();
  const RadialDensity projected = project(rho3);
  // plain midpoint discretization of the defining integral
  const int n = 20000;
  const double h = solved3().R / n;
  double riemann = 0.0;
  for (int i = 0; i < n; ++i) riemann += 2.0 * rho3((i + 0.5) * h) * h;
  CHECK(std::abs(projected(0.0) - riemann) <= 1e-8);
}

TEST_CASE("weighted potential generates a constant field on the projection") {
  // the operational content of the dimension-reduction lemma: with
  // Wt = eta_{d,a}^{-1} |x|^a / a - eta_{d,b}^{-1} |x|^b / b, the field
  // Wt * P[rho] is constant on the support ball
  const RadialDensity projected = project(solved3().density());
  const double wa = 1.0 / (3.0 * eta(2, 3.0));
  const double wb = 1.0 / (-1.0 * eta(2, -1.0));
  auto field = [&](double r) {
    return wa * convolve_power(3.0, projected, r) - wb * convolve_power(-1.0, projected, r);
  };
  const double center = field(0.0);
  for (int i = 1; i <= 8; ++i) {
    const double r = solved3().R * i / 8.0 * (1.0 - 1e-6);
    CHECK(std::abs(field(r) - center) <= 1e-6 * std::abs(center));
  }
}

TEST_CASE("exterior inequality transfers to the lifted dimension") {
  const EvenSolution& sol = even2();
  const ELReport report = check_euler_lagrange(sol.potential(), sol.density());
  CHECK(report.pass);
  CHECK(report.exterior_margin >= -1e-8);
}

TEST_CASE("projections of the polynomial test functions") {
  // P[ |x|^{2n} / sqrt(R^2 - |x|^2) ] is a degree-n polynomial in |x|^2 with
  // binomial coefficients weighted by the Wallis integrals
  const double R = 1.3;
  auto wallis = [](int k) {
    double acc = kPi;
    for (int i = 1; i <= k; ++i) acc *= (2.0 * i - 1.0) / (2.0 * i);
    return acc;
  };
  const QuadratureRule rule = gauss_legendre(96, 0.0, 0.5 * kPi);
  for (int n = 0; n <= 3; ++n) {
    for (double z : {0.0, 0.4, 0.9, 1.2}) {
      const double h2 = R * R - z * z;
      // integral over psi of (z^2 + h^2 sin^2 psi)^n after t = h sin psi
      double got = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        got += 2.0 * rule.weights[i] *
               std::pow(z * z + h2 * std::sin(rule.nodes[i]) * std::sin(rule.nodes[i]),
                        static_cast<double>(n));
      double want = 0.0;
      double binom = 1.0;
      for (int k = 0; k <= n; ++k) {
        want += binom * wallis(k) * std::pow(z * z, static_cast<double>(n - k)) *
                std::pow(h2, static_cast<double>(k));
        binom *= static_cast<double>(n - k) / (k + 1.0);
      }
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

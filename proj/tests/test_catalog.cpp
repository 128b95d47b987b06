#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "minim/catalog.hpp"
#include "minim/errors.hpp"
#include "minim/numerics.hpp"
#include "minim/verify.hpp"

using namespace minim;

TEST_CASE("quadratic attraction stated instances") {
  // d = 3, b = -1: uniform unit ball
  const CatalogEntry ball = quadratic_attraction(3, -1.0);
  CHECK(ball.density.support_radius() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ball.density.edge_exponent() == 0.0);
  CHECK(ball.density.mass() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ball.label == "uniform-ball-d3-b-1");

  // d = 2, b = 0 (log repulsion): uniform unit disk
  const CatalogEntry disk = quadratic_attraction(2, 0.0);
  CHECK(disk.density.support_radius() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(disk.density.edge_exponent() == 0.0);
  CHECK(disk.potential.b == 0.0);

  // d = 1, b = 1: uniform unit interval
  const CatalogEntry seg = quadratic_attraction(1, 1.0);
  CHECK(seg.density.support_radius() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(seg.density(0.3) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("quadratic attraction has a flat profile exactly at b = 2 - d") {
  for (int d : {1, 2, 3, 5}) {
    const CatalogEntry entry = quadratic_attraction(d, 2.0 - d);
    CHECK(entry.density.edge_exponent() == 0.0);
    CHECK(entry.density(0.0) ==
          doctest::Approx(entry.density(0.9 * entry.density.support_radius()))
              .epsilon(1e-12));
  }
}

TEST_CASE("quadratic attraction range checks") {
  CHECK_THROWS_AS(quadratic_attraction(3, -3.0), DomainError);
  CHECK_THROWS_AS(quadratic_attraction(3, 1.0), DomainError);   // b >= 4 - d
  CHECK_THROWS_AS(quadratic_attraction(1, 2.0), DomainError);   // b >= 2
  // a singular-edge member of the family normalizes correctly
  const CatalogEntry frac = quadratic_attraction(3, -0.5);
  CHECK(frac.density.edge_exponent() < 0.0);
  CHECK(frac.density.mass() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sphere shell stated instance and exclusions") {
  const CatalogEntry sh = sphere_shell(3, 2.0, 1.0);
  CHECK(shell_boundary_b(3, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sh.density.support_radius() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(sh.density.kind() == RadialDensity::Kind::kShell);

  CHECK_THROWS_AS(sphere_shell(2, 2.0, 2.0), DomainError);       // b == a
  CHECK_THROWS_AS(sphere_shell(3, 4.0, 2.0), ExcludedCaseError); // degenerate pair
  CHECK_THROWS_AS(sphere_shell(1, 2.0, 1.0), DomainError);       // d < 2
  CHECK_THROWS_AS(sphere_shell(3, 5.0, 1.0), DomainError);       // a > 4
  CHECK_THROWS_AS(sphere_shell(3, 2.0, 0.5), DomainError);       // b < b_*
}

TEST_CASE("frank family radii and normalization") {
  for (double a : {2.2, 2.5, 2.8}) {
    const CatalogEntry entry = frank_interval(a);
    CHECK(entry.density.mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(entry.density.edge_exponent() ==
          doctest::Approx(-0.5 * (a - 1.0)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(frank_interval(2.0), DomainError);
  CHECK_THROWS_AS(frank_interval(3.0), DomainError);
  // the edge profile diverges yet remains integrable
  const CatalogEntry entry = frank_interval(2.5);
  const double R = entry.density.support_radius();
  CHECK(entry.density(R * (1.0 - 1e-8)) > entry.density(R * 0.5) * 1e3);
}

TEST_CASE("catalog labels resolve") {
  const auto entries = catalog_entries();
  CHECK(entries.size() == 5);
  for (const CatalogEntry& entry : entries) {
    const CatalogEntry found = catalog_find(entry.label);
    CHECK(found.potential.d == entry.potential.d);
    CHECK(found.potential.a == entry.potential.a);
    CHECK(found.potential.b == entry.potential.b);
  }
  const CatalogEntry parametric = catalog_find("quadratic-d3-b-0.5");
  CHECK(parametric.potential.b == doctest::Approx(-0.5));
  CHECK_THROWS_AS(catalog_find("no-such-entry"), DomainError);
}

TEST_CASE("every catalog entry passes the Euler-Lagrange check") {
  for (const CatalogEntry& entry : catalog_entries()) {
    const ELReport report = check_euler_lagrange(entry.potential, entry.density);
    INFO(entry.label);
    CHECK(report.pass);
    CHECK(report.interior_residual <= 1e-6);
    CHECK(report.exterior_margin >= -1e-8);
  }
}

TEST_CASE("known interior field constants") {
  // uniform ball d = 3: W * rho = 9/5; uniform disk d = 2 (log): 3/4;
  // uniform interval d = 1: -1/3; shell d = 3: -4/9
  CHECK(check_euler_lagrange(quadratic_attraction(3, -1.0).potential,
                             quadratic_attraction(3, -1.0).density)
            .C0_estimate == doctest::Approx(9.0 / 5.0).epsilon(1e-11));
  CHECK(check_euler_lagrange(quadratic_attraction(2, 0.0).potential,
                             quadratic_attraction(2, 0.0).density)
            .C0_estimate == doctest::Approx(3.0 / 4.0).epsilon(1e-11));
  CHECK(check_euler_lagrange(quadratic_attraction(1, 1.0).potential,
                             quadratic_attraction(1, 1.0).density)
            .C0_estimate == doctest::Approx(-1.0 / 3.0).epsilon(1e-11));
  CHECK(check_euler_lagrange(sphere_shell(3, 2.0, 1.0).potential,
                             sphere_shell(3, 2.0, 1.0).density)
            .C0_estimate == doctest::Approx(-4.0 / 9.0).epsilon(1e-12));
}

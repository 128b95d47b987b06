#ifndef MINIM_CATALOG_HPP
#define MINIM_CATALOG_HPP

#include <string>
#include <vector>

#include "minim/potential.hpp"

namespace minim {

// A previously known explicit minimizer, used as a cross-validation target.
struct CatalogEntry {
  std::string label;
  std::string description;
  std::string validity;  // human-readable parameter range
  Potential potential;
  RadialDensity density;
};

// a = 2 family: density C (R^2 - |x|^2)_+^{1 - (b+d)/2} on the ball of radius
// R = (Gamma((4-b)/2) Gamma((b+d)/2) / Gamma((2+d)/2))^{1/(2-b)}.
// Valid for -d < b < min(4 - d, 2).
CatalogEntry quadratic_attraction(int d, double b);

// Uniform sphere shell of radius
// R = (1/2) (Gamma((d+b-1)/2) Gamma((2d+a-2)/2) /
//            (Gamma((d+a-1)/2) Gamma((2d+b-2)/2)))^{1/(a-b)}.
// Valid for d >= 2, 2 <= a <= 4, b_*(a) <= b <= 2, b < a, (a, b) != (4, 2).
CatalogEntry sphere_shell(int d, double a, double b);

// Lower end of the shell validity range, b_*(a) = (-10+3a+7d-ad-d^2)/(d+a-3).
double shell_boundary_b(int d, double a);

// d = 1, b = 2 family for 2 < a < 3: density C (R^2 - x^2)_+^{-(a-1)/2} with
// R = (sqrt(pi) Gamma((3-a)/2) sin((a-1) pi/2) / (Gamma((4-a)/2) (a-1) pi))^{1/(a-2)}.
CatalogEntry frank_interval(double a);

// Showcase instances addressable from the CLI.
std::vector<CatalogEntry> catalog_entries();

// Finds a showcase entry by label, or parses a parametric label of the form
// uniform-ball-d{d}-b{b} / quadratic-d{d}-b{b} / sphere-shell-d{d}-a{a}-b{b} /
// frank-a{a}.
CatalogEntry catalog_find(const std::string& label);

}  // namespace minim

#endif  // MINIM_CATALOG_HPP

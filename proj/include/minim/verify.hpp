#ifndef MINIM_VERIFY_HPP
#define MINIM_VERIFY_HPP

#include <vector>

#include "minim/potential.hpp"

namespace minim {

// Euler-Lagrange verdict: W * rho must equal C0 on the support of rho and
// stay >= C0 elsewhere. Equality is checked on the interior grid (the single
// sphere radius for shells); the inequality on the exterior grid, which for
// shells also covers the open ball inside the sphere.
struct ELReport {
  double C0_estimate = 0.0;
  double interior_residual = 0.0;  // sup |W*rho - C0| / |C0| over the interior grid
  double exterior_margin = 0.0;    // min (W*rho - C0) over the exterior grid
  std::vector<double> interior_grid;
  std::vector<double> exterior_grid;
  std::vector<double> interior_values;
  std::vector<double> exterior_values;
  double tol_in = 1e-6;
  double tol_out = 1e-8;
  bool pass = false;
};

struct ELOptions {
  double tol_in = 1e-6;
  double tol_out = 1e-8;
  int n_interior = 64;
  int n_exterior = 64;
  double r_ext_max = 0.0;  // 0 means 3 R
};

ELReport check_euler_lagrange(const Potential& p, const RadialDensity& rho,
                              const ELOptions& opts = {});
ELReport check_euler_lagrange(const Potential& p, const RadialDensity& rho, double tol_in,
                              double tol_out, int n_interior, double r_ext_max);

// |C0 - 2 E| / |C0|: on a minimizer the energy is half the E-L constant.
double c0_identity_check(const Potential& p, const RadialDensity& rho);

}  // namespace minim

#endif  // MINIM_VERIFY_HPP

#ifndef MINIM_DIM_REDUCTION_HPP
#define MINIM_DIM_REDUCTION_HPP

#include <functional>

#include "minim/numerics.hpp"
#include "minim/odd_solver.hpp"
#include "minim/potential.hpp"

namespace minim {

// Gamma-ratio constant relating |x|^a/a across dimensions d and d+1:
// eta_{d,a} = Gamma((a+d)/2) Gamma((d+1)/2) / (Gamma((a+d+1)/2) Gamma(d/2)).
double eta(int d, double a);

// Additive constant for the logarithmic case:
// C_{d,ln} = (|S^{d-1}| / |S^d|) * integral of sin^{d-1}(phi) ln(sin phi) d phi.
double c_log(int d);

// Spherical average over lines through the origin: for a radial w on R^d and
// x in R^{d+1} with |x| = r, averages w(dist(<v>, x)) over v in S^d.
double q_average(const std::function<double(double)>& w, int d, double r);

// Integrates a (d+1)-dimensional radial profile along one coordinate,
// yielding a d-dimensional radial profile on the same support radius. The
// result carries a sqrt edge factor: edge exponent increases by 1/2.
RadialDensity project(const RadialDensity& rho);

// Rescaling factor of the even-dimension construction,
// lambda = (Gamma((3+d)/2) / (Gamma((4+d)/2) sqrt(pi)))^{1/(d+2)},
// which coincides with (eta_{d,3} / eta_{d,1-d})^{1/(d+2)}.
double lambda_even(int d);

// Minimizer for even d with (a, b) = (3, 1-d): projection of the odd
// solution in d+1 dimensions, rescaled by lambda.
struct EvenSolution {
  int d = 2;
  SeriesSolution source;  // odd minimizer in d+1 dimensions
  double lambda = 1.0;
  double R = 0.0;  // support radius, source.R / lambda
  double C0 = 0.0;
  double energy_value = 0.0;

  // Tabulated smooth part (2048-point monotone cubic) for fast evaluation.
  RadialDensity density() const;
  // Direct quadrature of the projection integral; the accuracy oracle.
  RadialDensity density_direct() const;
  Potential potential() const { return Potential(d, 3.0, 1.0 - d); }

  PchipInterpolant table;
};

EvenSolution even_minimizer(int d, const OddSolveOptions& opts = {});

// Assembles the projected, rescaled density from an existing odd solution
// without re-running the solver (used when loading solutions from disk).
EvenSolution make_even_solution(const SeriesSolution& source, bool compute_energy = true);

}  // namespace minim

#endif  // MINIM_DIM_REDUCTION_HPP

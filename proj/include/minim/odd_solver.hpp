#ifndef MINIM_ODD_SOLVER_HPP
#define MINIM_ODD_SOLVER_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "minim/potential.hpp"

namespace minim {

// Coefficients of the local ODE hierarchy for odd d with (a, b) = (3, 2-d).
// A relates the k-fold Laplacian of the interaction condition to moments,
// B drives the power-series recursion, D evaluates Laplacians at the origin.
double coef_A(int d, int k);
double coef_B(int d, int n);
double coef_D(int d, int k);

// Basis u_{2k}, k = 0..(d-1)/2, of entire radial solutions of
// Lap^{(d+1)/2} u = A_{d-1} (2-d) u. Term n of u_{2k} has degree
// n(d+1) + 2k; truncation is adaptive for evaluation up to r_max.
class SeriesBasis {
 public:
  explicit SeriesBasis(int d, double r_max = 5.0);

  int dim() const { return d_; }
  int count() const { return (d_ + 1) / 2; }
  double r_max() const { return r_max_; }

  double eval(int k, double r) const;
  double eval_sum(std::span<const double> c, double r) const;

  // cumulative coefficient stream of u_{2k}: term n is coefficients(k)[n] * r^{n(d+1)+2k}
  const std::vector<double>& coefficients(int k) const;

  // termwise integral of r^power u_{2k}(r) over [0, R]
  double integral_moment(int k, double R, int power) const;

  // termwise radial Laplacian applied `times` times; returns (degree, coefficient) pairs
  std::vector<std::pair<int, double>> laplacian_terms(int k, int times) const;

 private:
  int d_;
  double r_max_;
  std::vector<std::vector<double>> coef_;
};

// Moment-condition matrix M(R); its kernel at det M(R) = 0 yields the
// minimizer coefficients. Size (d+1)/2.
Eigen::MatrixXd matrix_M(const SeriesBasis& basis, double R);
Eigen::MatrixXd matrix_M(int d, double R);
double det_M(const SeriesBasis& basis, double R);
double det_M(int d, double R);

// The constructed minimizer for odd d, (a, b) = (3, 2-d):
// density u(r) = norm_const * sum_k c_k u_{2k}(r) on [0, R].
struct SeriesSolution {
  int d = 1;
  double R = 0.0;
  std::vector<double> c;       // unit-norm null vector, first entry positive
  double norm_const = 1.0;     // scalar enforcing unit mass
  double C0 = 0.0;             // Euler-Lagrange constant, (W * rho)(0)
  double energy_value = 0.0;
  std::shared_ptr<const SeriesBasis> basis;
  std::function<double(double)> elementary;  // set by closed_form

  double profile(double r) const;  // density value at radius r (0 beyond R)
  RadialDensity density() const;
  Potential potential() const { return Potential(d, 3.0, 2.0 - d); }
};

struct OddSolveOptions {
  double scan_max = 5.0;
  int n_scan = 512;
  double root_tol = 1e-14;
  double null_tol = 1e-9;
  bool compute_energy = true;
};

struct RootCandidate {
  double R = 0.0;
  bool null_found = false;
  bool nonnegative = false;
  double min_value = 0.0;  // minimum of the candidate profile on [0, R]
  std::vector<double> c;
};

struct OddSolveDiagnostics {
  std::vector<RootCandidate> candidates;
};

// Scans det M for roots, solves the null space at each, keeps the candidates
// whose profile is nonnegative, and requires exactly one survivor.
SeriesSolution solve_odd(int d, const OddSolveOptions& opts = {},
                         OddSolveDiagnostics* diagnostics = nullptr);

// d = 1 or 3: the same minimizer assembled from elementary functions.
SeriesSolution closed_form(int d);

// Elementary basis profiles (d = 1 and d = 3) and the d = 3 determinant.
double u0_elementary_d1(double r);
double u0_elementary_d3(double r);
double u2_elementary_d3(double r);
double det_M_elementary_d3(double R);

}  // namespace minim

#endif  // MINIM_ODD_SOLVER_HPP

#include "minim/odd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "minim/errors.hpp"
#include "minim/numerics.hpp"

namespace minim {

namespace {

constexpr double kBeta = 1.1892071150027210667;  // 2^{1/4}

void require_odd(int d, const char* who) {
  if (d < 1 || d % 2 == 0)
    throw DomainError(std::string(who) + ": requires odd d >= 1, got " + std::to_string(d));
}

}  // namespace

double coef_A(int d, int k) {
  require_odd(d, "coef_A");
  if (k < 0 || 2 * k > d - 1)
    throw DomainError("coef_A: k out of range 0..(d-1)/2");
  double acc = d + 1.0;
  for (int i = 0; i < k; ++i) acc *= (1.0 - 2.0 * i);
  for (int i = 0; i < k; ++i) acc *= (d - 1.0 - 2.0 * i);
  return acc;
}

double coef_B(int d, int n) {
  require_odd(d, "coef_B");
  if (n < 0) throw DomainError("coef_B: requires n >= 0");
  double acc = coef_A(d, (d - 1) / 2) * (2.0 - d);
  for (int f = 2 * n + 2; f <= 2 * n + d + 1; f += 2) acc /= f;
  for (int f = 2 * n + d; f <= 2 * n + 2 * d - 1; f += 2) acc /= f;
  return acc;
}

double coef_D(int d, int k) {
  require_odd(d, "coef_D");
  if (k < 0 || 2 * k > d - 1)
    throw DomainError("coef_D: k out of range 0..(d-1)/2");
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc *= (2.0 * i) * (2.0 * i + d - 2.0);
  return acc;
}

// ---------------------------------------------------------------------------
// SeriesBasis

SeriesBasis::SeriesBasis(int d, double r_max) : d_(d), r_max_(r_max) {
  require_odd(d, "SeriesBasis");
  if (!(r_max > 0.0)) throw DomainError("SeriesBasis: requires r_max > 0");
  const int nk = (d_ + 1) / 2;
  coef_.resize(nk);
  for (int k = 0; k < nk; ++k) {
    std::vector<double>& c = coef_[k];
    c.push_back(1.0);
    double partial = std::pow(r_max_, 2.0 * k);
    double value = partial;
    int quiet = 0;
    for (int n = 1; n <= 400; ++n) {
      const double cn = c.back() * coef_B(d_, ((n - 1) * (d_ + 1) + 2 * k) / 2);
      c.push_back(cn);
      const double term = cn * std::pow(r_max_, n * (d_ + 1) + 2.0 * k);
      partial += term;
      value = std::max(std::abs(partial), std::abs(term));
      quiet = (std::abs(term) < 1e-17 * std::max(std::abs(partial), 1e-300)) ? quiet + 1 : 0;
      if (quiet >= 3) break;
    }
    if (quiet < 3)
      throw AccuracyError("SeriesBasis: truncation cap reached before tail bound at r_max");
    (void)value;
  }
}

double SeriesBasis::eval(int k, double r) const {
  if (k < 0 || k >= count()) throw DomainError("SeriesBasis::eval: k out of range");
  if (r < 0.0) throw DomainError("SeriesBasis::eval: requires r >= 0");
  if (r > r_max_ * (1.0 + 1e-9))
    throw AccuracyError("SeriesBasis::eval: r beyond truncation range; rebuild with larger r_max");
  const std::vector<double>& c = coef_[k];
  double x = 1.0;
  for (int i = 0; i < 2 * k; ++i) x *= r;
  double step = 1.0;
  for (int i = 0; i < d_ + 1; ++i) step *= r;
  double acc = 0.0;
  for (double cn : c) {
    acc += cn * x;
    x *= step;
  }
  return acc;
}

double SeriesBasis::eval_sum(std::span<const double> c, double r) const {
  double acc = 0.0;
  for (int k = 0; k < count() && k < static_cast<int>(c.size()); ++k)
    acc += c[k] * eval(k, r);
  return acc;
}

const std::vector<double>& SeriesBasis::coefficients(int k) const {
  if (k < 0 || k >= count()) throw DomainError("SeriesBasis::coefficients: k out of range");
  return coef_[k];
}

double SeriesBasis::integral_moment(int k, double R, int power) const {
  if (k < 0 || k >= count()) throw DomainError("SeriesBasis::integral_moment: k out of range");
  if (R < 0.0) throw DomainError("SeriesBasis::integral_moment: requires R >= 0");
  if (R > r_max_ * (1.0 + 1e-9))
    throw AccuracyError("SeriesBasis::integral_moment: R beyond truncation range");
  const std::vector<double>& c = coef_[k];
  double acc = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double deg = static_cast<double>(n) * (d_ + 1) + 2.0 * k + power;
    acc += c[n] * std::pow(R, deg + 1.0) / (deg + 1.0);
  }
  return acc;
}

std::vector<std::pair<int, double>> SeriesBasis::laplacian_terms(int k, int times) const {
  if (k < 0 || k >= count()) throw DomainError("SeriesBasis::laplacian_terms: k out of range");
  std::vector<std::pair<int, double>> terms;
  const std::vector<double>& c = coef_[k];
  for (std::size_t n = 0; n < c.size(); ++n)
    terms.emplace_back(static_cast<int>(n) * (d_ + 1) + 2 * k, c[n]);
  for (int t = 0; t < times; ++t) {
    std::vector<std::pair<int, double>> next;
    for (auto [deg, cn] : terms) {
      // radial Laplacian maps c r^m to c m (m + d - 2) r^{m-2}
      const double cnext = cn * deg * (deg + d_ - 2.0);
      if (deg >= 2 && cnext != 0.0) next.emplace_back(deg - 2, cnext);
    }
    terms = std::move(next);
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Moment matrix

Eigen::MatrixXd matrix_M(const SeriesBasis& basis, double R) {
  const int d = basis.dim();
  const int nk = basis.count();
  Eigen::MatrixXd m(nk, nk);
  for (int k = 0; k < nk; ++k)
    for (int j = 0; j < nk; ++j) {
      m(k, j) = coef_A(d, k) * basis.integral_moment(j, R, d - 2 * k);
      if (k == j) m(k, j) -= coef_D(d, k);
    }
  return m;
}

Eigen::MatrixXd matrix_M(int d, double R) {
  SeriesBasis basis(d, std::max(R, 5.0));
  return matrix_M(basis, R);
}

double det_M(const SeriesBasis& basis, double R) { return matrix_M(basis, R).determinant(); }

double det_M(int d, double R) { return matrix_M(d, R).determinant(); }

// ---------------------------------------------------------------------------
// Solution assembly

double SeriesSolution::profile(double r) const {
  if (r < 0.0) throw DomainError("SeriesSolution::profile: requires r >= 0");
  if (r > R) return 0.0;
  if (elementary) return elementary(r);
  return norm_const * basis->eval_sum(c, r);
}

RadialDensity SeriesSolution::density() const {
  auto self = *this;
  return RadialDensity::profile(d, R, [self](double r) { return self.profile(r); });
}

namespace {

// dense sampling plus local refinement of interior minima
double profile_minimum(const SeriesBasis& basis, std::span<const double> c, double R) {
  const int n = 1000;
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) vals[i] = basis.eval_sum(c, R * i / n);
  double lo = vals[0];
  for (double v : vals) lo = std::min(lo, v);

  for (int i = 1; i < n; ++i) {
    if (vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1]) {
      double a = R * (i - 1) / n, b = R * (i + 1) / n;
      for (int iter = 0; iter < 80; ++iter) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (basis.eval_sum(c, m1) < basis.eval_sum(c, m2)) b = m2;
        else a = m1;
      }
      lo = std::min(lo, basis.eval_sum(c, 0.5 * (a + b)));
    }
  }
  return lo;
}

}  // namespace

SeriesSolution solve_odd(int d, const OddSolveOptions& opts, OddSolveDiagnostics* diagnostics) {
  require_odd(d, "solve_odd");
  auto basis = std::make_shared<SeriesBasis>(d, opts.scan_max);
  auto detf = [&](double R) { return det_M(*basis, R); };

  const double scan_lo = opts.scan_max / opts.n_scan;
  const std::vector<Bracket> brackets = bracket_roots(detf, scan_lo, opts.scan_max, opts.n_scan);

  OddSolveDiagnostics local;
  OddSolveDiagnostics& diag = diagnostics ? *diagnostics : local;
  diag.candidates.clear();

  for (const Bracket& br : brackets) {
    RootCandidate cand;
    cand.R = bisect(detf, br, opts.root_tol);
    try {
      const Eigen::VectorXd v = null_vector(matrix_M(*basis, cand.R), opts.null_tol);
      cand.null_found = true;
      cand.c.assign(v.data(), v.data() + v.size());
      double scale = 0.0;
      for (int i = 0; i <= 1000; ++i)
        scale = std::max(scale, std::abs(basis->eval_sum(cand.c, cand.R * i / 1000.0)));
      cand.min_value = profile_minimum(*basis, cand.c, cand.R);
      cand.nonnegative = cand.min_value >= -1e-10 * scale;
    } catch (const NoNullSpaceError&) {
      cand.null_found = false;
    }
    diag.candidates.push_back(std::move(cand));
  }

  std::vector<const RootCandidate*> survivors;
  for (const RootCandidate& cand : diag.candidates)
    if (cand.null_found && cand.nonnegative) survivors.push_back(&cand);

  auto describe = [&]() {
    std::ostringstream os;
    os << "scan (0, " << opts.scan_max << "] with " << opts.n_scan << " intervals found "
       << diag.candidates.size() << " determinant roots:";
    for (const RootCandidate& cand : diag.candidates)
      os << " {R=" << cand.R << ", null=" << cand.null_found
         << ", nonneg=" << cand.nonnegative << ", min=" << cand.min_value << "}";
    return os.str();
  };
  if (survivors.empty())
    throw ConstructionError("solve_odd(d=" + std::to_string(d) +
                            "): no admissible root; " + describe());
  if (survivors.size() > 1)
    throw AmbiguityError("solve_odd(d=" + std::to_string(d) +
                         "): multiple admissible roots; " + describe());

  SeriesSolution sol;
  sol.d = d;
  sol.R = survivors.front()->R;
  sol.c = survivors.front()->c;
  sol.basis = basis;

  double mass = 0.0;
  for (int k = 0; k < basis->count(); ++k)
    mass += sol.c[k] * basis->integral_moment(k, sol.R, d - 1);
  mass *= sphere_area(d);
  sol.norm_const = 1.0 / mass;

  const RadialDensity rho = sol.density();
  sol.C0 = convolve(sol.potential(), rho, 0.0);
  sol.energy_value = opts.compute_energy ? energy(sol.potential(), rho) : 0.0;
  return sol;
}

// ---------------------------------------------------------------------------
// Elementary forms for d = 1 and d = 3

double u0_elementary_d1(double r) { return std::cosh(std::numbers::sqrt2 * r); }

double u0_elementary_d3(double r) {
  if (r < 0.1) {
    const double r4 = r * r * r * r;
    return 1.0 - r4 / 15.0 + r4 * r4 / 5670.0 - r4 * r4 * r4 / 12162150.0;
  }
  const double x = kBeta * r;
  return (std::cosh(x) * std::sin(x) + std::sinh(x) * std::cos(x)) / (2.0 * kBeta * r);
}

double u2_elementary_d3(double r) {
  if (r < 0.1) {
    const double r2 = r * r, r4 = r2 * r2;
    return r2 * (1.0 - r4 / 105.0 + r4 * r4 / 103950.0);
  }
  const double x = kBeta * r;
  return 3.0 * (std::cosh(x) * std::sin(x) - std::sinh(x) * std::cos(x)) /
         (2.0 * kBeta * kBeta * kBeta * r);
}

double det_M_elementary_d3(double R) {
  const double t = kBeta * R;
  return 3.0 * (std::cos(2.0 * t) + std::cosh(2.0 * t) + t * std::sin(2.0 * t) -
                t * std::sinh(2.0 * t));
}

SeriesSolution closed_form(int d) {
  if (d != 1 && d != 3) throw DomainError("closed_form: only d = 1 and d = 3");

  SeriesSolution sol;
  sol.d = d;
  sol.basis = std::make_shared<SeriesBasis>(d, 5.0);

  if (d == 1) {
    auto f = [](double R) {
      const double t = std::numbers::sqrt2 * R;
      return t - 1.0 / std::tanh(t);
    };
    sol.R = bisect(f, make_bracket(f, 0.5, 1.5), 1e-15);
    sol.c = {1.0};
    sol.norm_const = 1.0 / (std::numbers::sqrt2 * std::sinh(std::numbers::sqrt2 * sol.R));
    const double norm = sol.norm_const;
    sol.elementary = [norm](double r) { return norm * u0_elementary_d1(r); };
  } else {
    auto f = [](double R) { return det_M_elementary_d3(R); };
    const std::vector<Bracket> brs = bracket_roots(f, 0.01, 3.0, 256);
    if (brs.size() != 1)
      throw ConstructionError("closed_form(3): expected a single determinant root");
    sol.R = bisect(f, brs.front(), 1e-15);
    const double t = kBeta * sol.R;
    const double ratio = std::numbers::sqrt2 / 3.0 * std::tan(t) * std::tanh(t);
    const double norm2 = std::sqrt(1.0 + ratio * ratio);
    sol.c = {1.0 / norm2, ratio / norm2};
    const double c0 = sol.c[0], c2 = sol.c[1];
    auto shape = [c0, c2](double r) {
      return c0 * u0_elementary_d3(r) + c2 * u2_elementary_d3(r);
    };
    const QuadratureRule rule = gauss_legendre(128, 0.0, sol.R);
    double mass = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      mass += rule.weights[i] * shape(rule.nodes[i]) * rule.nodes[i] * rule.nodes[i];
    mass *= sphere_area(3);
    sol.norm_const = 1.0 / mass;
    const double norm = sol.norm_const;
    sol.elementary = [norm, shape](double r) { return norm * shape(r); };
  }

  const RadialDensity rho = sol.density();
  sol.C0 = convolve(sol.potential(), rho, 0.0);
  sol.energy_value = energy(sol.potential(), rho);
  return sol;
}

}  // namespace minim

#include "minim/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "minim/errors.hpp"

namespace minim {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  if (x < 0.5) {
    // reflection keeps the approximation in its accurate range
    return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  }
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    acc += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + 7.5;
  // split the power so intermediates stay below the overflow threshold up to
  // the Gamma(171) limit of double precision
  const double half_pow = std::pow(t, 0.5 * x + 0.25);
  return std::sqrt(2.0 * kPi) * half_pow * (half_pow * std::exp(-t)) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: requires x > 0, got " + std::to_string(x));
  // the huge-argument exponential in the Lanczos form costs a few ulps;
  // recurse into the accurate range instead
  if (x > 140.0) {
    double acc = 1.0;
    while (x > 140.0) {
      x -= 1.0;
      acc *= x;
    }
    return acc * lanczos_gamma(x);
  }
  return lanczos_gamma(x);
}

double beta_fn(double x, double y) {
  return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y);
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: requires d >= 1, got " + std::to_string(d));
  return 2.0 * std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d);
}

namespace {

// Reference Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
QuadratureRule gl_reference(int n) {
  QuadratureRule rule;
  rule.lo = -1.0;
  rule.hi = 1.0;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // symmetrize the central node exactly
  return rule;
}

const QuadratureRule& gl_cached(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gl_reference(n)).first;
  return it->second;
}

double gl_apply(const QuadratureRule& ref, const std::function<double(double)>& f,
                double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < ref.nodes.size(); ++i)
    acc += ref.weights[i] * f(mid + half * ref.nodes[i]);
  return acc * half;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("gauss_legendre: requires n >= 1, got " + std::to_string(n));
  if (!(lo < hi)) throw DomainError("gauss_legendre: requires lo < hi");
  const QuadratureRule& ref = gl_cached(n);
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.nodes[i];
    rule.weights[i] = half * ref.weights[i];
  }
  return rule;
}

Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("make_bracket: requires lo < hi");
  const double flo = f(lo), fhi = f(hi);
  if (!std::isfinite(flo)) throw EvaluationError("make_bracket: non-finite value", lo);
  if (!std::isfinite(fhi)) throw EvaluationError("make_bracket: non-finite value", hi);
  if (!(flo * fhi < 0.0)) throw DomainError("make_bracket: no sign change on [lo, hi]");
  return Bracket{lo, hi};
}

std::vector<Bracket> bracket_roots(const std::function<double(double)>& f, double lo,
                                   double hi, int n_scan) {
  if (n_scan < 2) throw DomainError("bracket_roots: requires n_scan >= 2");
  if (!(lo < hi)) throw DomainError("bracket_roots: requires lo < hi");

  const double h = (hi - lo) / n_scan;
  auto scan = [&](double shift, std::vector<Bracket>& out) -> bool {
    out.clear();
    double x_prev = lo + shift;
    double f_prev = f(x_prev);
    if (!std::isfinite(f_prev)) throw EvaluationError("bracket_roots: non-finite value", x_prev);
    for (int i = 1; i <= n_scan; ++i) {
      const double x = (i == n_scan && shift == 0.0) ? hi : lo + shift + i * h;
      if (x > hi) break;
      const double fx = f(x);
      if (!std::isfinite(fx)) throw EvaluationError("bracket_roots: non-finite value", x);
      if (fx == 0.0 || f_prev == 0.0) return false;  // landed on a root, caller re-scans
      if (f_prev * fx < 0.0) out.push_back(Bracket{x_prev, x});
      x_prev = x;
      f_prev = fx;
    }
    return true;
  };

  std::vector<Bracket> out;
  if (!scan(0.0, out)) {
    // a grid point hit a root exactly; a half-step shift restores strict signs
    if (!scan(0.5 * h, out))
      throw EvaluationError("bracket_roots: repeated exact zero on scan grid", lo);
  }
  return out;
}

double bisect(const std::function<double(double)>& f, const Bracket& bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisect: requires tol > 0");
  double lo = bracket.lo, hi = bracket.hi;
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval at machine resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

Eigen::VectorXd null_vector(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DomainError("null_vector: requires a nonempty square matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double s_max = sigma(0);
  const double s_min = sigma(sigma.size() - 1);
  if (s_max > 0.0 && s_min > tol * s_max)
    throw NoNullSpaceError("null_vector: smallest singular value " + std::to_string(s_min) +
                           " exceeds tol * largest (" + std::to_string(tol * s_max) + ")");
  Eigen::VectorXd v = svd.matrixV().col(m.cols() - 1);
  const double scale = v.cwiseAbs().maxCoeff();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * scale) {
      if (v(i) < 0.0) v = -v;
      break;
    }
  }
  return v;
}

double integrate_graded(const std::function<double(double)>& f, double lo, double hi,
                        bool singular_lo, bool singular_hi, int levels, int nodes,
                        double min_frac_lo, double min_frac_hi) {
  if (!(lo < hi)) return 0.0;
  const QuadratureRule& ref = gl_cached(nodes);
  const double len = hi - lo;

  if (!singular_lo && !singular_hi) {
    return gl_apply(ref, f, lo, 0.5 * (lo + hi)) + gl_apply(ref, f, 0.5 * (lo + hi), hi);
  }
  if (singular_lo && singular_hi) {
    const double mid = 0.5 * (lo + hi);
    return integrate_graded(f, lo, mid, true, false, levels, nodes, 2.0 * min_frac_lo, 0.0) +
           integrate_graded(f, mid, hi, false, true, levels, nodes, 0.0, 2.0 * min_frac_hi);
  }

  // Geometric ladder toward the singular end; panel widths halve each level
  // down to the cutoff fraction (machine-epsilon distance when zero), and the
  // sliver below the cutoff is dropped.
  const double cutoff = singular_lo ? min_frac_lo : min_frac_hi;
  auto emit = [&](double frac_a, double frac_b) {
    double a, b;
    if (singular_lo) {
      a = lo + frac_a * len;
      b = lo + frac_b * len;
    } else {
      b = hi - frac_a * len;
      a = hi - frac_b * len;
    }
    if (frac_a == 0.0) {
      // closing panel: skip the singular endpoint itself by a hair
      const double eps = 1e-300;
      if (singular_lo) a = std::max(a, lo + eps);
      else b = std::min(b, hi - eps);
    }
    return b > a ? gl_apply(ref, f, a, b) : 0.0;
  };

  double acc = 0.0;
  double frac_hi = 1.0;
  for (int k = 0; k + 1 < levels && frac_hi * 0.5 > cutoff; ++k) {
    acc += emit(frac_hi * 0.5, frac_hi);
    frac_hi *= 0.5;
  }
  if (frac_hi > cutoff) acc += emit(cutoff, frac_hi);
  return acc;
}

PchipInterpolant::PchipInterpolant(double x0, double dx, std::vector<double> y)
    : x0_(x0), dx_(dx), y_(std::move(y)) {
  const std::size_t n = y_.size();
  if (n < 2 || !(dx_ > 0.0)) throw DomainError("PchipInterpolant: need >= 2 points, dx > 0");
  slope_.assign(n, 0.0);
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y_[i + 1] - y_[i]) / dx_;

  // Fritsch-Carlson: harmonic mean of adjacent secants where they share sign.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] > 0.0)
      slope_[i] = 2.0 * delta[i - 1] * delta[i] / (delta[i - 1] + delta[i]);
    else
      slope_[i] = 0.0;
  }
  slope_[0] = ((2.0 * delta[0]) - ((n > 2) ? slope_[1] : delta[0]));
  slope_[n - 1] = ((2.0 * delta[n - 2]) - ((n > 2) ? slope_[n - 2] : delta[n - 2]));
  // clamp endpoint slopes to preserve shape near the boundary
  if (slope_[0] * delta[0] <= 0.0) slope_[0] = 0.0;
  else if (std::abs(slope_[0]) > 3.0 * std::abs(delta[0])) slope_[0] = 3.0 * delta[0];
  if (slope_[n - 1] * delta[n - 2] <= 0.0) slope_[n - 1] = 0.0;
  else if (std::abs(slope_[n - 1]) > 3.0 * std::abs(delta[n - 2]))
    slope_[n - 1] = 3.0 * delta[n - 2];
}

double PchipInterpolant::operator()(double x) const {
  const std::size_t n = y_.size();
  double t = (x - x0_) / dx_;
  if (t <= 0.0) t = 0.0;
  if (t >= static_cast<double>(n - 1)) t = static_cast<double>(n - 1);
  std::size_t i = static_cast<std::size_t>(t);
  if (i >= n - 1) i = n - 2;
  const double s = (x - (x0_ + dx_ * static_cast<double>(i))) / dx_;
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  return h00 * y_[i] + h10 * dx_ * slope_[i] + h01 * y_[i + 1] + h11 * dx_ * slope_[i + 1];
}

}  // namespace minim

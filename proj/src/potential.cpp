#include "minim/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "minim/errors.hpp"
#include "minim/numerics.hpp"

namespace minim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// grading depth for radial integrals; tail ~ 2^{-kGradeLevels} * |log|
constexpr int kGradeLevels = 40;
constexpr int kGradeNodes = 12;

double ipow(double x, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= x;
  return acc;
}

// |x|^p with the p == 0 -> ln|x| convention
double power_term(double p, double r) {
  if (p == 0.0) return std::log(r);
  return std::pow(r, p) / p;
}

}  // namespace

Potential::Potential(int d_, double a_, double b_) : d(d_), a(a_), b(b_) {
  if (d < 1) throw DomainError("Potential: requires d >= 1");
  if (!(b > -static_cast<double>(d)))
    throw DomainError("Potential: requires b > -d (b = " + std::to_string(b) + ")");
  if (!(b < a)) throw DomainError("Potential: requires b < a");
}

double eval_potential(const Potential& p, double r) {
  if (r < 0.0) throw DomainError("eval_potential: requires r >= 0");
  return power_term(p.a, r) - power_term(p.b, r);
}

double potential_slope(const Potential& p, double r) {
  return std::pow(r, p.a - 1.0) - std::pow(r, p.b - 1.0);
}

// ---------------------------------------------------------------------------
// RadialDensity

RadialDensity RadialDensity::profile(int d, double R, std::function<double(double)> smooth,
                                     double edge_exponent) {
  if (d < 1) throw DomainError("RadialDensity: requires d >= 1");
  if (!(R > 0.0)) throw DomainError("RadialDensity: requires R > 0");
  if (!(edge_exponent > -1.0))
    throw DomainError("RadialDensity: edge exponent must exceed -1 for integrability");
  RadialDensity rho;
  rho.kind_ = Kind::kProfile;
  rho.d_ = d;
  rho.R_ = R;
  rho.q_ = edge_exponent;
  rho.smooth_ = std::move(smooth);
  rho.mass_ = sphere_area(d) * rho.integrate_profile([](double) { return 1.0; });
  return rho;
}

RadialDensity RadialDensity::shell(int d, double R, double mass) {
  if (d < 1) throw DomainError("RadialDensity: requires d >= 1");
  if (!(R > 0.0)) throw DomainError("RadialDensity: requires R > 0");
  if (!(mass > 0.0)) throw DomainError("RadialDensity: requires mass > 0");
  RadialDensity rho;
  rho.kind_ = Kind::kShell;
  rho.d_ = d;
  rho.R_ = R;
  rho.mass_ = mass;
  return rho;
}

double RadialDensity::operator()(double r) const {
  if (kind_ == Kind::kShell)
    throw UnsupportedKindError("RadialDensity: shells have no pointwise density");
  if (r < 0.0) throw DomainError("RadialDensity: requires r >= 0");
  if (r > R_) return 0.0;
  if (q_ == 0.0) return smooth_(r);
  return smooth_(r) * std::pow(R_ - r, q_);
}

double RadialDensity::smooth_part(double r) const {
  if (kind_ == Kind::kShell)
    throw UnsupportedKindError("RadialDensity: shells have no pointwise density");
  return smooth_(r);
}

double RadialDensity::moment(double k) const {
  if (kind_ == Kind::kShell) return mass_ * std::pow(R_, k);
  return sphere_area(d_) *
         integrate_profile([k](double s) { return s == 0.0 && k == 0.0 ? 1.0 : std::pow(s, k); });
}

RadialDensity RadialDensity::normalized() const {
  if (kind_ == Kind::kShell) return shell(d_, R_, 1.0);
  const double scale = 1.0 / mass_;
  auto base = smooth_;
  RadialDensity rho = *this;
  rho.smooth_ = [base, scale](double r) { return scale * base(r); };
  rho.mass_ = 1.0;
  return rho;
}

namespace {

int edge_substitution_order(double q) {
  if (q == 0.0) return 1;
  return std::clamp(static_cast<int>(std::ceil(2.0 / (1.0 + q))), 2, 32);
}

}  // namespace

double RadialDensity::integrate_profile(const std::function<double(double)>& g,
                                        std::span<const double> breakpoints) const {
  if (kind_ == Kind::kShell)
    throw UnsupportedKindError("RadialDensity: integrate_profile needs a profile");

  std::vector<double> pts;
  pts.push_back(0.0);
  for (double b : breakpoints)
    if (b > 0.0 && b < R_) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const int dloc = d_;
  auto raw = [&](double s) { return (*this)(s)*ipow(s, dloc - 1) * g(s); };

  double total = 0.0;
  // interior segments end at breakpoints; kinks of g live there
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += integrate_graded(raw, pts[i], pts[i + 1], true, true, kGradeLevels, kGradeNodes);

  // final segment [x0, R]: substitute s = R - L v^m to absorb the edge factor;
  // v = 0 maps to the edge, v = 1 to x0
  const double x0 = pts.back();
  const double len = R_ - x0;
  if (!(len > 0.0)) return total;
  const int m = edge_substitution_order(q_);
  const double mu = m * (1.0 + q_) - 1.0;
  const double scale = std::pow(len, q_ + 1.0) * m;
  auto sub = [&](double v) {
    const double s = R_ - len * std::pow(v, m);
    return smooth_(s) * ipow(s, dloc - 1) * g(s) * scale * std::pow(v, mu);
  };
  total += integrate_graded(sub, 0.0, 1.0, true, true, kGradeLevels, kGradeNodes, 1e-13, 1e-13);
  return total;
}

// ---------------------------------------------------------------------------
// Spherical kernel

namespace {

// angular integrand on the sphere: w(dist^2(theta)) sin^{d-2}(theta),
// dist^2 = dif^2 + 4 r s sin^2(theta/2) with dif = |r - s| supplied by the
// caller (cancellation-free near the diagonal)
double kernel_ladder(int d, double p, double dif, double r, double s, int nodes) {
  const double eps2 = dif * dif;
  const double c4 = 4.0 * r * s;
  auto h = [&](double theta) {
    const double sh = std::sin(0.5 * theta);
    const double d2 = eps2 + c4 * sh * sh;
    const double w = (p == 0.0) ? 0.5 * std::log(d2) : std::exp(0.5 * p * std::log(d2));
    return w * ipow(std::sin(theta), d - 2);
  };

  const QuadratureRule panel = gauss_legendre(nodes, -1.0, 1.0);
  auto apply = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) acc += panel.weights[i] * h(mid + half * panel.nodes[i]);
    return acc * half;
  };

  double acc = 0.0;
  double theta_hi = kPi;
  for (int k = 0; k < 64; ++k) {
    const double theta_lo = 0.5 * theta_hi;
    acc += apply(theta_lo, theta_hi);
    theta_hi = theta_lo;
    if (eps2 > 0.0 && c4 * theta_hi * theta_hi < 1e-4 * eps2) {
      // distance is essentially constant below theta_hi; one panel finishes it
      acc += apply(0.0, theta_hi);
      theta_hi = 0.0;
      break;
    }
    if (theta_hi < 1e-18) break;
  }
  return sphere_area(d - 1) * acc;
}

void kernel_validate(int d, double p, double r, double s) {
  if (d < 1) throw DomainError("radial_kernel: requires d >= 1");
  if (r < 0.0 || s < 0.0) throw DomainError("radial_kernel: requires r, s >= 0");
  if (!(p > -static_cast<double>(d)))
    throw DomainError("radial_kernel: requires p > -d for integrability");
}

double kernel_at_zero(int d, double p, double other) {
  // integrand is constant on the sphere
  if (p == 0.0) return sphere_area(d) * std::log(other);
  return sphere_area(d) * std::pow(other, p);
}

// dif = |r - s|, supplied exactly by quadrature in distance coordinates
double radial_kernel_sep(int d, double p, double r, double s, double dif) {
  kernel_validate(d, p, r, s);
  if (r == 0.0 || s == 0.0) return kernel_at_zero(d, p, std::max(r, s));

  if (d == 1) {
    if (p == 0.0) return std::log(dif) + std::log(r + s);
    return std::pow(dif, p) + std::pow(r + s, p);
  }

  if (dif == 0.0) {
    if (p != 0.0 && p <= 1.0 - d) return kInf;
    if (p != 0.0) {
      // closed form on the diagonal: dist = 2 r sin(theta/2)
      return sphere_area(d - 1) * std::pow(2.0 * std::sqrt(r * s), p) * ipow(2.0, d - 2) *
             beta_fn(0.5 * (p + d - 1.0), 0.5 * (d - 1.0));
    }
    // log diagonal (finite for d >= 2) falls through to quadrature below
  }

  if (d == 3) {
    const double sum = r + s;
    if (p == 0.0) {
      auto psi = [](double t) { return t == 0.0 ? 0.0 : t * (std::log(t) - 1.0); };
      return kPi / (2.0 * r * s) * (psi(sum * sum) - psi(dif * dif));
    }
    if (p == -2.0) return 2.0 * kPi / (r * s) * std::log(sum / dif);
    return 2.0 * kPi / ((p + 2.0) * r * s) *
           (std::pow(sum, p + 2.0) - std::pow(dif, p + 2.0));
  }

  if (d == 2 && p == 0.0) return 2.0 * kPi * std::log(0.5 * (r + s + dif));
  if (d == 2 && p == -1.0) {
    // K(k) with k' = dif / (r + s), evaluated AGM-side to avoid 1 - k^2
    double a = 1.0, b = dif / (r + s);
    for (int i = 0; i < 80 && std::abs(a - b) > 1e-17 * a; ++i) {
      const double an = 0.5 * (a + b);
      b = std::sqrt(a * b);
      a = an;
    }
    return 4.0 / (r + s) * (0.5 * kPi / a);
  }

  if (p > 0.0 && p == std::floor(p) && std::fmod(p, 2.0) == 0.0) {
    // even power: entire integrand, a single panel is spectrally exact
    const QuadratureRule rule = gauss_legendre(32, 0.0, kPi);
    const double eps2 = dif * dif, c4 = 4.0 * r * s;
    double acc = 0.0;
    for (int i = 0; i < 32; ++i) {
      const double th = rule.nodes[i];
      const double sh = std::sin(0.5 * th);
      acc += rule.weights[i] * ipow(eps2 + c4 * sh * sh, static_cast<int>(p) / 2) *
             ipow(std::sin(th), d - 2);
    }
    return sphere_area(d - 1) * acc;
  }

  return kernel_ladder(d, p, dif, r, s, 12);
}

}  // namespace

double radial_kernel(int d, double p, double r, double s) {
  return radial_kernel_sep(d, p, r, s, std::abs(r - s));
}

double radial_kernel_quadrature(int d, double p, double r, double s) {
  kernel_validate(d, p, r, s);
  if (r == 0.0 || s == 0.0) return kernel_at_zero(d, p, std::max(r, s));
  if (d == 1) {
    if (p == 0.0) return std::log(std::abs(r - s)) + std::log(r + s);
    return std::pow(std::abs(r - s), p) + std::pow(r + s, p);
  }
  if (r == s && p != 0.0 && p <= 1.0 - d) return kInf;
  return kernel_ladder(d, p, std::abs(r - s), r, s, 16);
}

// ---------------------------------------------------------------------------
// Convolution and energy

namespace {

// substitution order removing a t^alpha endpoint factor (alpha > -1)
int power_substitution_order(double alpha) {
  if (alpha >= 0.0) return 1;
  return std::clamp(static_cast<int>(std::ceil(2.0 / (1.0 + alpha))), 2, 32);
}

}  // namespace

double convolve_power(double p, const RadialDensity& rho, double r) {
  const int d = rho.dim();
  if (!(p > -static_cast<double>(d)))
    throw DomainError("convolve_power: requires p > -d");
  if (r < 0.0) throw DomainError("convolve_power: requires r >= 0");

  if (rho.kind() == RadialDensity::Kind::kShell)
    return rho.mass() * radial_kernel(d, p, r, rho.support_radius()) / sphere_area(d);

  const double R = rho.support_radius();
  const double q = rho.edge_exponent();
  // blow-up rate of the kernel toward the diagonal (and toward s = 0 at r = 0)
  const double alpha = p + static_cast<double>(d) - 1.0;
  const int mk = power_substitution_order(alpha);
  const int me = edge_substitution_order(q);
  const double w_floor = std::max(1e-13, std::pow(1e-290, 1.0 / mk));
  const double v_floor = std::max(1e-13, std::pow(1e-290, 1.0 / me));
  double total = 0.0;

  if (r == 0.0) {
    // kernel is |S^{d-1}| s^p; substitute away the s -> 0 power on [0, R/2]
    auto g0 = [&](double s) {
      return (p == 0.0 ? std::log(s) : std::pow(s, p)) * rho(s) * ipow(s, d - 1);
    };
    const double half = 0.5 * R;
    auto sub0 = [&](double w) {
      const double s = half * std::pow(w, mk);
      return g0(s) * half * mk * std::pow(w, mk - 1.0);
    };
    total += sphere_area(d) *
             integrate_graded(sub0, 0.0, 1.0, true, false, kGradeLevels, kGradeNodes, w_floor);
    const double mu = me * (1.0 + q) - 1.0;
    const double scale = std::pow(half, q + 1.0) * me;
    auto sub_edge = [&](double v) {
      const double s = std::min(R, R - half * std::pow(v, me));
      const double g = (p == 0.0 ? std::log(s) : std::pow(s, p));
      return rho.smooth_part(s) * ipow(s, d - 1) * g * scale * std::pow(v, mu);
    };
    total += sphere_area(d) * integrate_graded(sub_edge, 0.0, 1.0, true, false, kGradeLevels,
                                               kGradeNodes, v_floor);
    return total;
  }

  // Radial quadrature in distance-to-diagonal coordinates: the kernel kink at
  // s = r receives the separation exactly, so quadrature nodes never collide
  // with the diagonal however close r sits to the support edge. Power
  // substitutions remove the t^alpha blow-up on each kink side.
  if (r < R) {
    // s in [0, r] via t = r - s = r w^mk; the s = 0 end is regular
    auto inner = [&](double w) {
      const double t = r * std::pow(w, mk);
      const double s = std::max(0.0, r - t);
      return rho(s) * ipow(s, d - 1) * radial_kernel_sep(d, p, r, s, t) * r * mk *
             std::pow(w, mk - 1.0);
    };
    total += integrate_graded(inner, 0.0, 1.0, true, false, kGradeLevels, kGradeNodes, w_floor);

    // s in [r, mid] via t = s - r, mid halfway to the edge
    const double len_b = 0.5 * (R - r);
    if (len_b > 0.0) {
      auto middle = [&](double w) {
        const double t = len_b * std::pow(w, mk);
        const double s = std::min(R, r + t);
        return rho(s) * ipow(s, d - 1) * radial_kernel_sep(d, p, r, s, t) * len_b * mk *
               std::pow(w, mk - 1.0);
      };
      total +=
          integrate_graded(middle, 0.0, 1.0, true, false, kGradeLevels, kGradeNodes, w_floor);
    }
  }

  // s in [mid, R] (all of [0, R] when r >= R): edge substitution s = R - L v^me
  const double len = r < R ? 0.5 * (R - r) : R;
  if (len > 0.0) {
    const double mu = me * (1.0 + q) - 1.0;
    const double scale = std::pow(len, q + 1.0) * me;
    const double base = r < R ? R - r : r - R;  // separation of r from the edge
    auto sub = [&](double v) {
      const double vm = std::pow(v, me);
      const double s = std::min(R, R - len * vm);
      // dif = |s - r|: base - L v^me inside, base + L v^me outside
      const double dif = r < R ? base - len * vm : base + len * vm;
      return rho.smooth_part(s) * ipow(s, d - 1) *
             radial_kernel_sep(d, p, r, s, std::abs(dif)) * scale * std::pow(v, mu);
    };
    total += integrate_graded(sub, 0.0, 1.0, true, false, kGradeLevels, kGradeNodes, v_floor);
  }
  return total;
}

double convolve(const Potential& p, const RadialDensity& rho, double r) {
  if (p.d != rho.dim()) throw DomainError("convolve: potential and density dimensions differ");
  const double attract =
      (p.a == 0.0) ? convolve_power(0.0, rho, r) : convolve_power(p.a, rho, r) / p.a;
  const double repel =
      (p.b == 0.0) ? convolve_power(0.0, rho, r) : convolve_power(p.b, rho, r) / p.b;
  return attract - repel;
}

namespace {

// lighter grading for the outer energy integral; the integrand is C^1
constexpr int kEnergyLevels = 18;
constexpr int kEnergyNodes = 12;

double energy_outer(const RadialDensity& rho, const std::function<double(double)>& field) {
  if (rho.kind() == RadialDensity::Kind::kShell)
    return 0.5 * rho.mass() * field(rho.support_radius());

  const int d = rho.dim();
  const double R = rho.support_radius();
  const double q = rho.edge_exponent();
  const int m = edge_substitution_order(q);
  const double mu = m * (1.0 + q) - 1.0;
  const double scale = std::pow(R, q + 1.0) * m;
  auto sub = [&](double v) {
    const double s = std::min(R, R - R * std::pow(v, m));
    double acc = rho.smooth_part(s);
    for (int i = 0; i < d - 1; ++i) acc *= s;
    return acc * field(s) * scale * std::pow(v, mu);
  };
  const double v_floor = std::max(1e-13, std::pow(1e-290, 1.0 / m));
  const double integral = integrate_graded(sub, 0.0, 1.0, true, true, kEnergyLevels,
                                           kEnergyNodes, v_floor, 1e-13);
  return 0.5 * sphere_area(d) * integral;
}

}  // namespace

double energy_power(double p, const RadialDensity& rho) {
  return energy_outer(rho, [&](double r) { return convolve_power(p, rho, r); });
}

double energy(const Potential& p, const RadialDensity& rho) {
  if (p.d != rho.dim()) throw DomainError("energy: potential and density dimensions differ");
  const double e = energy_outer(rho, [&](double r) { return convolve(p, rho, r); });
  if (!std::isfinite(e)) throw DomainError("energy: divergent integral");
  return e;
}

}  // namespace minim

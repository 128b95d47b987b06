#include "minim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "minim/errors.hpp"
#include "minim/numerics.hpp"

namespace minim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |x|^e with multiply chains for the small integer exponents that dominate
// the pairwise loops
double pow_fast(double x, double e) {
  const int ie = static_cast<int>(e);
  if (e == static_cast<double>(ie) && ie >= -4 && ie <= 4) {
    double acc = 1.0;
    for (int i = 0; i < std::abs(ie); ++i) acc *= x;
    return ie >= 0 ? acc : 1.0 / acc;
  }
  return std::pow(x, e);
}

double pair_potential(const Potential& p, double r) {
  const double attract = (p.a == 0.0) ? std::log(r) : pow_fast(r, p.a) / p.a;
  const double repel = (p.b == 0.0) ? std::log(r) : pow_fast(r, p.b) / p.b;
  return attract - repel;
}

// W'(r) = r^{a-1} - r^{b-1}, log convention included
double pair_slope(const Potential& p, double r) {
  return pow_fast(r, p.a - 1.0) - pow_fast(r, p.b - 1.0);
}

double pair_distance(const std::vector<double>& pts, int d, int i, int j) {
  double acc = 0.0;
  for (int k = 0; k < d; ++k) {
    const double diff = pts[i * d + k] - pts[j * d + k];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

// uniform double in [0, 1) from the top 53 bits; identical on every platform
double rand53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double discrete_energy(const ParticleConfig& cfg) {
  const int n = cfg.count();
  const int d = cfg.d;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double r = pair_distance(cfg.points, d, i, j);
      if (r == 0.0 && cfg.potential.b <= 0.0) return kInf;
      acc += pair_potential(cfg.potential, r);
    }
  return acc / (static_cast<double>(n) * n);
}

std::vector<double> discrete_gradient(const ParticleConfig& cfg) {
  const int n = cfg.count();
  const int d = cfg.d;
  std::vector<double> grad(cfg.points.size(), 0.0);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double r = pair_distance(cfg.points, d, i, j);
      const double f = scale * pair_slope(cfg.potential, r) / r;
      for (int k = 0; k < d; ++k) {
        const double diff = cfg.points[i * d + k] - cfg.points[j * d + k];
        grad[i * d + k] += f * diff;
        grad[j * d + k] -= f * diff;
      }
    }
  return grad;
}

ParticleConfig initial_particles(int N, const Potential& p, std::uint64_t seed,
                                 double init_radius) {
  if (N < 2) throw DomainError("initial_particles: requires N >= 2");
  ParticleConfig cfg{p.d, p, {}, seed, 0, 0.0};
  cfg.points.reserve(static_cast<std::size_t>(N) * p.d);
  std::mt19937_64 rng(seed);
  std::vector<double> candidate(p.d);
  while (cfg.count() < N) {
    double norm2 = 0.0;
    for (int k = 0; k < p.d; ++k) {
      candidate[k] = init_radius * (2.0 * rand53(rng) - 1.0);
      norm2 += candidate[k] * candidate[k];
    }
    if (norm2 > init_radius * init_radius) continue;
    bool distinct = true;
    for (int j = 0; j < cfg.count() && distinct; ++j) {
      double acc = 0.0;
      for (int k = 0; k < p.d; ++k) {
        const double diff = candidate[k] - cfg.points[j * p.d + k];
        acc += diff * diff;
      }
      distinct = acc > 1e-24;
    }
    if (!distinct) continue;  // resample on collision
    cfg.points.insert(cfg.points.end(), candidate.begin(), candidate.end());
  }
  return cfg;
}

ParticleConfig minimize_from(ParticleConfig cfg, const MinimizeOptions& opts) {
  double e = discrete_energy(cfg);
  double step = opts.initial_step;
  int iter = 0;
  for (; iter < opts.max_steps; ++iter) {
    const std::vector<double> grad = discrete_gradient(cfg);
    double gmax = 0.0, g2 = 0.0;
    for (double g : grad) {
      gmax = std::max(gmax, std::abs(g));
      g2 += g * g;
    }
    cfg.grad_max_norm = gmax;
    if (gmax <= opts.grad_tol) break;

    // Armijo backtracking, factor 0.5, slope 1e-4. Once the predicted
    // decrease falls below the floating-point resolution of the energy the
    // Armijo certificate is vacuous; progress is then certified by a strict
    // drop of the gradient max-norm instead.
    ParticleConfig trial = cfg;
    double t = step;
    bool accepted = false;
    double e_trial = e;
    while (t * gmax > 1e-20) {
      for (std::size_t k = 0; k < cfg.points.size(); ++k)
        trial.points[k] = cfg.points[k] - t * grad[k];
      e_trial = discrete_energy(trial);
      if (std::isfinite(e_trial)) {
        const double predicted = 1e-4 * t * g2;
        if (predicted > 8e-16 * std::abs(e)) {
          if (e_trial <= e - predicted) {
            accepted = true;
            break;
          }
        } else if (e_trial <= e) {
          double gmax_trial = 0.0;
          for (double g : discrete_gradient(trial)) gmax_trial = std::max(gmax_trial, std::abs(g));
          if (gmax_trial < gmax) {
            accepted = true;
            break;
          }
        }
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (gmax > 1e6 * opts.grad_tol)
        throw DescentStalledError("minimize_particles: line search stalled at step " +
                                  std::to_string(iter) + " with gradient " +
                                  std::to_string(gmax));
      break;  // at the resolution floor near a minimum; nothing left to certify
    }
    cfg.points.swap(trial.points);
    e = e_trial;
    step = 2.0 * t;  // regrow the trial step after each acceptance
  }
  cfg.step_count = iter;

  // remove the centroid; the energy is translation invariant
  const int n = cfg.count();
  for (int k = 0; k < cfg.d; ++k) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += cfg.points[i * cfg.d + k];
    mean /= n;
    for (int i = 0; i < n; ++i) cfg.points[i * cfg.d + k] -= mean;
  }
  {
    const std::vector<double> grad = discrete_gradient(cfg);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::abs(g));
    cfg.grad_max_norm = gmax;
  }
  return cfg;
}

ParticleConfig minimize_particles(int N, const Potential& p, std::uint64_t seed,
                                  const MinimizeOptions& opts) {
  return minimize_from(initial_particles(N, p, seed, opts.init_radius), opts);
}

ParticleConfig minimize_particles(int N, const Potential& p, std::uint64_t seed, int max_steps) {
  MinimizeOptions opts;
  opts.max_steps = max_steps;
  return minimize_particles(N, p, seed, opts);
}

std::vector<std::pair<double, double>> radial_histogram(const ParticleConfig& cfg, int n_bins) {
  if (n_bins < 2) throw DomainError("radial_histogram: requires n_bins >= 2");
  const int n = cfg.count();
  const int d = cfg.d;

  std::vector<double> centroid(d, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) centroid[k] += cfg.points[i * d + k] / n;

  std::vector<double> radii(n, 0.0);
  double r_max = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < d; ++k) {
      const double diff = cfg.points[i * d + k] - centroid[k];
      acc += diff * diff;
    }
    radii[i] = std::sqrt(acc);
    r_max = std::max(r_max, radii[i]);
  }
  const double width = (r_max > 0.0 ? r_max : 1.0) * (1.0 + 1e-12) / n_bins;

  std::vector<int> counts(n_bins, 0);
  for (double r : radii) {
    int bin = static_cast<int>(r / width);
    counts[std::min(bin, n_bins - 1)] += 1;
  }

  std::vector<std::pair<double, double>> hist(n_bins);
  const double area = sphere_area(d);
  for (int bin = 0; bin < n_bins; ++bin) {
    const double lo = bin * width, hi = lo + width;
    const double vol = area * (std::pow(hi, d) - std::pow(lo, d)) / d;
    // shell-volume centroid of the bin
    const double center = (d / (d + 1.0)) * (std::pow(hi, d + 1) - std::pow(lo, d + 1)) /
                          (std::pow(hi, d) - std::pow(lo, d));
    hist[bin] = {center, counts[bin] / (vol * n)};
  }
  return hist;
}

double support_radius(const ParticleConfig& cfg, double trim) {
  if (trim < 0.0 || trim > 0.05)
    throw DomainError("support_radius: trim must lie in [0, 0.05]");
  const int n = cfg.count();
  const int d = cfg.d;
  std::vector<double> centroid(d, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) centroid[k] += cfg.points[i * d + k] / n;
  std::vector<double> radii(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < d; ++k) {
      const double diff = cfg.points[i * d + k] - centroid[k];
      acc += diff * diff;
    }
    radii[i] = std::sqrt(acc);
  }
  std::sort(radii.begin(), radii.end());
  const int idx = std::min(n - 1, static_cast<int>(std::floor((1.0 - trim) * n)));
  return radii[idx];
}

}  // namespace minim

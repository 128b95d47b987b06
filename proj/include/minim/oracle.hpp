#ifndef MINIM_ORACLE_HPP
#define MINIM_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "minim/potential.hpp"

namespace minim {

// N interacting particles in R^d; the desk-scale discretization of the
// energy used as an independent check on the analytic minimizers.
struct ParticleConfig {
  int d;
  Potential potential;
  std::vector<double> points;  // N x d, row-major
  std::uint64_t seed = 0;
  int step_count = 0;
  double grad_max_norm = 0.0;

  int count() const { return static_cast<int>(points.size()) / d; }
};

// (1 / 2N^2) sum over i != j of W(x_i - x_j); +inf on a collision with
// singular repulsion.
double discrete_energy(const ParticleConfig& cfg);

// Gradient of discrete_energy with respect to all coordinates.
std::vector<double> discrete_gradient(const ParticleConfig& cfg);

struct MinimizeOptions {
  int max_steps = 2000;
  double grad_tol = 1e-9;     // max-norm stopping threshold
  double init_radius = 2.0;   // uniform initial samples in this ball
  double initial_step = 1.0;
};

// Seeded uniform samples in a ball (Mersenne Twister, fixed mapping, so runs
// reproduce across platforms), then plain gradient descent with Armijo
// backtracking (factor 0.5, slope 1e-4). Stops at grad_tol or max_steps.
// The returned configuration is centered at the origin.
ParticleConfig minimize_particles(int N, const Potential& p, std::uint64_t seed,
                                  const MinimizeOptions& opts = {});
ParticleConfig minimize_particles(int N, const Potential& p, std::uint64_t seed, int max_steps);

// Descent from a caller-supplied configuration (same contract as above).
ParticleConfig minimize_from(ParticleConfig cfg, const MinimizeOptions& opts = {});

// Draws the seeded initial configuration without descending (test hook).
ParticleConfig initial_particles(int N, const Potential& p, std::uint64_t seed,
                                 double init_radius = 2.0);

// Shell-volume-normalized radial density estimate; bin centers at the
// shell-volume centroids. Pairs are (center, estimated density).
std::vector<std::pair<double, double>> radial_histogram(const ParticleConfig& cfg, int n_bins);

// (1 - trim)-quantile of the distances to the centroid; trim in [0, 0.05].
double support_radius(const ParticleConfig& cfg, double trim = 0.0);

}  // namespace minim

#endif  // MINIM_ORACLE_HPP

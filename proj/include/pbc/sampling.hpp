#pragma once

// Seeded random configurations for tests, acceptance runs and the search
// harness. Every sampler draws from the generator it is handed and retries
// until its acceptance conditions hold.

#include "pbc/configuration.hpp"

#include <random>

namespace pbc::sampling {

using Rng = std::mt19937_64;

/// Generator for trial `index` of a run seeded with `seed`; independent of
/// the order in which trials are evaluated.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

struct EuclideanOptions {
  // Every (n-1)-subset simplex must have volume >= min_simplex * diameter^d / d!.
  double min_simplex = 0.02;
  // Relative distance from the nearest conhyperspherical configuration.
  double min_noncyclic = 0.05;
  // d = 2: reject self-intersecting vertex orders.
  bool simple = false;
};

/// n = d + 2 points uniform in [-1, 1]^d, well away from degeneracy.
Configuration euclidean(Rng& rng, int dim, const EuclideanOptions& opts = {});

/// Points uniform in a spherical cap of angular radius `cap` about a random
/// pole (so inside an open hemisphere), with the same margins as above
/// measured by the spherical kernel.
Configuration spherical(Rng& rng, int dim, double cap = 1.0, double min_noncyclic = 0.05);

/// Points uniform in the Poincare disk of Euclidean radius `radius`, lifted to
/// the hyperboloid. Only non-degeneracy of the input is enforced; whether the
/// triad centers are ordinary is left to the caller.
Configuration hyperbolic(Rng& rng, int dim, double radius = 0.6, double min_noncyclic = 0.05);

/// d + 2 points on a random hypersphere in R^d (conhyperspherical).
Configuration cyclic(Rng& rng, int dim);

/// Uniform random unit vector in R^n.
Vector<double> unit_vector(Rng& rng, int n);

}  // namespace pbc::sampling

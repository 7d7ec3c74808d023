#include "pbc/sampling.hpp"

#include "pbc/construction.hpp"
#include "pbc/euclid.hpp"
#include "pbc/noneuclid.hpp"

#include <cmath>
#include <numbers>

namespace pbc::sampling {

namespace {

bool well_separated(const Configuration& c, double min_noncyclic) {
  try {
    const auto report = degeneracy_report(c);
    return report.dependent_subsets.empty() && report.deviation >= min_noncyclic;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Vector<double> unit_vector(Rng& rng, int n) {
  std::normal_distribution<double> normal;
  Vector<double> v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Configuration euclidean(Rng& rng, int dim, const EuclideanOptions& opts) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Configuration c;
  c.geometry = Geometry::Euclidean;
  c.dim = dim;
  c.points.resize(dim, dim + 2);
  for (;;) {
    for (Eigen::Index k = 0; k < c.points.size(); ++k) c.points.data()[k] = coord(rng);
    if (opts.simple && euclid::polygon_self_intersects(c.points)) continue;
    const double diam = euclid::diameter(c.points);
    bool thin = false;
    for (Eigen::Index i = 0; i < c.size() && !thin; ++i)
      thin = std::abs(euclid::affine_dependence_cofactor(euclid::omit_cyclic(c.points, i))) <
             opts.min_simplex * std::pow(diam, dim);
    if (thin) continue;
    if (euclid::conhyperspherical_deviation(c.points) < opts.min_noncyclic) continue;
    return c;
  }
}

Configuration spherical(Rng& rng, int dim, double cap, double min_noncyclic) {
  Configuration c;
  c.geometry = Geometry::Spherical;
  c.dim = dim;
  c.points.resize(dim + 1, dim + 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const Vector<double> pole = unit_vector(rng, dim + 1);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      // uniform on the cap: accept-reject against the pole's angle
      Vector<double> v;
      do {
        v = unit_vector(rng, dim + 1);
      } while (std::acos(std::clamp(v.dot(pole), -1.0, 1.0)) > cap);
      c.points.col(i) = v;
    }
    if (!noneuclid::in_open_hemisphere(c.points)) continue;
    if (well_separated(c, min_noncyclic)) return c;
  }
}

Configuration hyperbolic(Rng& rng, int dim, double radius, double min_noncyclic) {
  Configuration c;
  c.geometry = Geometry::Hyperbolic;
  c.dim = dim;
  c.points.resize(dim + 1, dim + 2);
  std::uniform_real_distribution<double> coord(-radius, radius);
  for (;;) {
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      Vector<double> x(dim);
      do {
        for (int k = 0; k < dim; ++k) x(k) = coord(rng);
      } while (x.norm() >= radius);
      c.points.col(i) = noneuclid::from_poincare(x);
    }
    try {
      const auto report = degeneracy_report(c);
      if (!report.dependent_subsets.empty()) continue;
      if (report.center_class_failures.empty() && report.deviation < min_noncyclic) continue;
    } catch (const Error&) {
      continue;
    }
    return c;
  }
}

Configuration cyclic(Rng& rng, int dim) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> rad(0.5, 2.0);
  Configuration c;
  c.geometry = Geometry::Euclidean;
  c.dim = dim;
  c.points.resize(dim, dim + 2);
  for (;;) {
    Vector<double> center(dim);
    for (int k = 0; k < dim; ++k) center(k) = coord(rng);
    const double r = rad(rng);
    for (Eigen::Index i = 0; i < c.size(); ++i) c.points.col(i) = center + r * unit_vector(rng, dim);
    bool thin = false;
    const double diam = euclid::diameter(c.points);
    for (Eigen::Index i = 0; i < c.size() && !thin; ++i)
      thin = std::abs(euclid::affine_dependence_cofactor(euclid::omit_cyclic(c.points, i))) <
             0.02 * std::pow(diam, dim);
    if (!thin) return c;
  }
}

}  // namespace pbc::sampling

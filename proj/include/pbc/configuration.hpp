#pragma once

#include "pbc/common.hpp"
#include "pbc/noneuclid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pbc {

enum class Geometry { Euclidean, Spherical, Hyperbolic };

std::string_view to_string(Geometry g);
std::optional<Geometry> parse_geometry(std::string_view name);

/// Model of a non-Euclidean geometry; throws ModelMismatch for Euclidean.
noneuclid::Model model_of(Geometry g);

/// One generation N^(i) of the construction: n = dim + 2 points stored as
/// columns, in ambient coordinates (R^d, unit vectors of R^(d+1), or the
/// hyperboloid in R^(d+1)). Indices are cyclic.
struct Configuration {
  Geometry geometry{Geometry::Euclidean};
  int dim{2};
  PointSet<double> points;
  int generation{1};
  std::string label;
  std::optional<std::uint64_t> seed;

  Eigen::Index size() const { return points.cols(); }
  Eigen::Index ambient() const { return geometry == Geometry::Euclidean ? dim : dim + 1; }
  auto point(Eigen::Index i) const { return points.col(((i % size()) + size()) % size()); }

  /// Same geometry and metadata, new points, generation advanced by `step`.
  Configuration with_points(PointSet<double> pts, int step) const;
};

/// Throws ValidationError unless the configuration satisfies the model
/// invariants: n = d + 2, finite coordinates, unit sphere vectors or upper
/// hyperboloid points, and spherical points within an open hemisphere.
void validate(const Configuration& c);

/// Distance in the configuration's geometry.
double distance(Geometry g, const Vector<double>& p, const Vector<double>& q);

/// Largest pairwise distance (geodesic for the non-Euclidean models).
double diameter(const Configuration& c);

}  // namespace pbc

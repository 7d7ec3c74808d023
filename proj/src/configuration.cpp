#include "pbc/configuration.hpp"

#include "pbc/euclid.hpp"

#include <cmath>

namespace pbc {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Spherical: return "spherical";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::optional<Geometry> parse_geometry(std::string_view name) {
  if (name == "euclidean") return Geometry::Euclidean;
  if (name == "spherical") return Geometry::Spherical;
  if (name == "hyperbolic") return Geometry::Hyperbolic;
  return std::nullopt;
}

noneuclid::Model model_of(Geometry g) {
  if (g == Geometry::Spherical) return noneuclid::Model::Spherical;
  if (g == Geometry::Hyperbolic) return noneuclid::Model::Hyperbolic;
  throw Error(ErrorCode::ModelMismatch, "Euclidean geometry has no curved model");
}

Configuration Configuration::with_points(PointSet<double> pts, int step) const {
  Configuration out = *this;
  out.points = std::move(pts);
  out.generation = generation + step;
  return out;
}

void validate(const Configuration& c) {
  if (c.dim < 2) throw Error(ErrorCode::ValidationError, "dimension must be at least 2");
  if (c.size() != c.dim + 2)
    throw Error(ErrorCode::ValidationError, "expected " + std::to_string(c.dim + 2) +
                                                " points for dim " + std::to_string(c.dim) +
                                                ", got " + std::to_string(c.size()));
  if (c.points.rows() != c.ambient())
    throw Error(ErrorCode::ValidationError, "points have " + std::to_string(c.points.rows()) +
                                                " coordinates, expected " +
                                                std::to_string(c.ambient()));
  if (!c.points.allFinite()) throw Error(ErrorCode::ValidationError, "non-finite coordinate");

  switch (c.geometry) {
    case Geometry::Euclidean:
      break;
    case Geometry::Spherical:
      for (Eigen::Index i = 0; i < c.size(); ++i)
        if (std::abs(c.points.col(i).norm() - 1.0) > 1e-12)
          throw Error(ErrorCode::ValidationError, "point " + std::to_string(i + 1) +
                                                      " is not a unit vector");
      if (!noneuclid::in_open_hemisphere(c.points))
        throw Error(ErrorCode::ValidationError, "spherical points do not fit in an open hemisphere");
      break;
    case Geometry::Hyperbolic:
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        const auto p = c.points.col(i);
        const double q = noneuclid::form(noneuclid::Model::Hyperbolic, p, p);
        if (std::abs(q + 1.0) > 1e-10 * std::max(1.0, p.squaredNorm()) || p(c.dim) < 1.0 - 1e-12)
          throw Error(ErrorCode::ValidationError, "point " + std::to_string(i + 1) +
                                                      " is not on the upper hyperboloid sheet");
      }
      break;
  }
}

double distance(Geometry g, const Vector<double>& p, const Vector<double>& q) {
  if (g == Geometry::Euclidean) return (p - q).norm();
  return noneuclid::distance(model_of(g), p, q);
}

double diameter(const Configuration& c) {
  if (c.geometry == Geometry::Euclidean) return euclid::diameter(c.points);
  return noneuclid::diameter_ne(model_of(c.geometry), c.points);
}

}  // namespace pbc

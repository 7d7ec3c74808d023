#include "pbc/construction.hpp"

#include "pbc/noneuclid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pbc {

namespace {

using Kind = noneuclid::CenterClass<double>::Kind;

std::vector<int> subset_indices(Eigen::Index n, Eigen::Index omitted) {
  std::vector<int> out;
  for (Eigen::Index k = 0; k < n; ++k)
    if (k != omitted) out.push_back(static_cast<int>(k));
  return out;
}

double euclid_deviation(const PointSet<double>& pts) {
  try {
    return euclid::conhyperspherical_deviation(pts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateInput) throw Error(ErrorCode::Degenerate, e.what());
    throw;
  }
}

}  // namespace

Vector<double> circumcenter_in(Geometry g, const PointSet<double>& points) {
  if (g == Geometry::Euclidean) {
    const auto sphere = euclid::circumcenter(points);
    if (sphere.is_ideal())
      throw Error(ErrorCode::Degenerate, "affinely dependent points have an ideal circumcenter");
    return sphere.center;
  }
  noneuclid::CenterClass<double> center;
  try {
    center = noneuclid::circumcenter_ne(model_of(g), points);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateInput) throw Error(ErrorCode::Degenerate, e.what());
    throw;
  }
  if (!center.is_ordinary())
    throw Error(ErrorCode::HyperbolicCenterNotOrdinary,
                std::string("circumcenter is ") + noneuclid::to_string(center.kind));
  return center.point;
}

double conhyperspherical_deviation(const Configuration& c) {
  if (c.geometry == Geometry::Euclidean) return euclid_deviation(c.points);

  const auto model = model_of(c.geometry);
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const PointSet<double> sub = euclid::omit_cyclic(c.points, i);
    noneuclid::CenterClass<double> center;
    try {
      center = noneuclid::circumcenter_ne(model, sub);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateInput) throw Error(ErrorCode::Degenerate, e.what());
      throw;
    }
    // All n points on one ordinary sphere force every subset center to be it.
    if (!center.is_ordinary()) return std::numeric_limits<double>::infinity();
    double dev = 0;
    for (Eigen::Index k = 0; k < c.size(); ++k)
      dev = std::max(dev, std::abs(noneuclid::distance(model, center.point, c.points.col(k)) -
                                   center.radius));
    best = std::min(best, dev / center.radius);
  }
  return best;
}

bool is_conhyperspherical(const Configuration& c, double tolerance) {
  return conhyperspherical_deviation(c) <= tolerance;
}

DegeneracyReport degeneracy_report(const Configuration& c, double tolerance) {
  DegeneracyReport report;
  const Eigen::Index n = c.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const PointSet<double> sub = euclid::omit_cyclic(c.points, i);
    if (c.geometry == Geometry::Euclidean) {
      if (euclid::affinely_dependent(sub)) report.dependent_subsets.push_back(subset_indices(n, i));
      continue;
    }
    try {
      const auto center = noneuclid::circumcenter_ne(model_of(c.geometry), sub);
      if (!center.is_ordinary())
        report.center_class_failures.push_back({static_cast<int>(i), center.kind});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateInput && e.code() != ErrorCode::DuplicatePoints) throw;
      report.dependent_subsets.push_back(subset_indices(n, i));
    }
  }
  if (report.dependent_subsets.empty()) {
    report.deviation = conhyperspherical_deviation(c);
    report.conhyperspherical = report.deviation <= tolerance;
  } else {
    report.deviation = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

Configuration next_generation(const Configuration& c) {
  const Eigen::Index n = c.size();
  if (c.geometry == Geometry::Euclidean) {
    const auto dependent = euclid::dependent_subsets(c.points);
    if (!dependent.empty())
      throw Error(ErrorCode::Degenerate, "the points other than V" +
                                             std::to_string(dependent.front() + 1) +
                                             " are affinely dependent");
  }
  if (conhyperspherical_deviation(c) <= tol::kCollapse)
    throw Error(ErrorCode::Conhyperspherical, "the next generation degenerates to a single point");

  PointSet<double> out(c.points.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.col(i) = circumcenter_in(c.geometry, euclid::omit_cyclic(c.points, i));

  Configuration next = c.with_points(std::move(out), +1);
  if (diameter(next) <= tol::kCollapse * diameter(c))
    throw Error(ErrorCode::Conhyperspherical, "the next generation collapsed to a point");
  return next;
}

Vector<double> isogonal_conjugate(Geometry g, const PointSet<double>& simplex,
                                  const Vector<double>& p) {
  const Eigen::Index vertices = simplex.cols();
  const double scale = std::max(1.0, simplex.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < vertices; ++k)
    if ((simplex.col(k) - p).norm() <= tol::kCoincident * scale)
      throw Error(ErrorCode::CoincidentPoints, "point coincides with a simplex vertex");

  PointSet<double> reflections(simplex.rows(), vertices);
  if (g == Geometry::Euclidean) {
    if (euclid::affinely_dependent(simplex))
      throw Error(ErrorCode::DegenerateInput, "simplex is affinely dependent");
    for (Eigen::Index k = 0; k < vertices; ++k)
      reflections.col(k) = euclid::reflect(p, euclid::affine_hyperplane(euclid::omit_cyclic(simplex, k)));
    const auto sphere = euclid::circumcenter(reflections);
    if (sphere.is_ideal())
      throw Error(ErrorCode::ConjugateAtInfinity,
                  "point lies on the circumsphere; its isogonal conjugate is ideal");
    return sphere.center;
  }

  const auto model = model_of(g);
  for (Eigen::Index k = 0; k < vertices; ++k)
    reflections.col(k) =
        noneuclid::reflect_ne(model, p, noneuclid::hyperplane_through(model, euclid::omit_cyclic(simplex, k)));
  return circumcenter_in(g, reflections);
}

Configuration prev_generation(const Configuration& c) {
  const Eigen::Index n = c.size();
  PointSet<double> out(c.points.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.col(i) = isogonal_conjugate(c.geometry, euclid::omit_cyclic(c.points, i), c.points.col(i));
  return c.with_points(std::move(out), -1);
}

std::string_view to_string(IterationStatus s) {
  switch (s) {
    case IterationStatus::Completed: return "completed";
    case IterationStatus::Collapsed: return "collapsed";
    case IterationStatus::Degenerate: return "degenerate";
    case IterationStatus::NotOrdinary: return "not-ordinary";
    case IterationStatus::ConjugateAtInfinity: return "conjugate-at-infinity";
    case IterationStatus::Failed: return "failed";
  }
  return "?";
}

IterationResult iterate(const Configuration& c, int steps, Direction direction) {
  IterationResult result;
  result.generations.push_back(c);
  for (int step = 1; step <= steps; ++step) {
    try {
      const Configuration& last = result.generations.back();
      result.generations.push_back(direction == Direction::Forward ? next_generation(last)
                                                                   : prev_generation(last));
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::Conhyperspherical: result.status = IterationStatus::Collapsed; break;
        case ErrorCode::Degenerate:
        case ErrorCode::DegenerateInput:
        case ErrorCode::DuplicatePoints:
        case ErrorCode::CoincidentPoints: result.status = IterationStatus::Degenerate; break;
        case ErrorCode::HyperbolicCenterNotOrdinary: result.status = IterationStatus::NotOrdinary; break;
        case ErrorCode::ConjugateAtInfinity: result.status = IterationStatus::ConjugateAtInfinity; break;
        default: result.status = IterationStatus::Failed; break;
      }
      result.failed_step = step;
      result.message = e.what();
      break;
    }
  }
  return result;
}

euclid::PolytopeVolume<double> polytope_volume(const Configuration& c) {
  if (c.geometry != Geometry::Euclidean)
    throw Error(ErrorCode::ModelMismatch, "volumes are only defined for Euclidean configurations");
  return euclid::polytope_volume(c.points);
}

}  // namespace pbc

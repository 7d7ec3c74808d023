#include "pbc/quad.hpp"

#include "pbc/construction.hpp"
#include "pbc/euclid.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pbc {

namespace {

// Counter-clockwise angle from u to v in [0, 2 pi).
double ccw_angle(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  const double a = std::atan2(u.x() * v.y() - u.y() * v.x(), u.dot(v));
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

double cot(double angle) {
  if (std::abs(std::sin(angle)) <= 1e-12)
    throw Error(ErrorCode::CotangentPole, "angle is a multiple of pi");
  // a right angle is only representable to rounding; its cotangent is 0
  if (std::abs(std::remainder(angle - std::numbers::pi / 2, std::numbers::pi)) <=
      4 * std::numeric_limits<double>::epsilon())
    return 0.0;
  return std::cos(angle) / std::sin(angle);
}

}  // namespace

QuadAngles quad_angles(const Configuration& c) {
  if (c.geometry != Geometry::Euclidean || c.dim != 2 || c.size() != 4)
    throw Error(ErrorCode::UnsupportedDimension, "quadrilateral angles need a planar quadrilateral");
  if (euclid::polygon_self_intersects(c.points))
    throw Error(ErrorCode::CrossingQuadrilateral, "vertex order is self-intersecting");

  Eigen::Matrix<double, 2, 4> p = c.points;
  if (euclid::signed_area(p) < 0) p.row(1) *= -1.0;  // mirror to counter-clockwise

  std::array<double, 4> whole{}, first{}, second{};
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d v = p.col(i);
    const Eigen::Vector2d next = p.col((i + 1) % 4) - v;
    const Eigen::Vector2d prev = p.col((i + 3) % 4) - v;
    const Eigen::Vector2d diag = p.col((i + 2) % 4) - v;
    whole[i] = ccw_angle(next, prev);
    second[i] = ccw_angle(next, diag);
    first[i] = whole[i] - second[i];
  }

  QuadAngles q;
  q.alpha = whole[0], q.beta = whole[1], q.gamma = whole[2], q.delta = whole[3];
  q.alpha1 = first[0], q.alpha2 = second[0];
  q.beta1 = first[1], q.beta2 = second[1];
  q.gamma1 = first[2], q.gamma2 = second[2];
  q.delta1 = first[3], q.delta2 = second[3];
  return q;
}

std::array<double, 3> ratio_formulas(const QuadAngles& q) {
  const double by_vertices = 0.25 * (cot(q.alpha) + cot(q.gamma)) * (cot(q.beta) + cot(q.delta));
  const double by_sides_da_bc =
      0.25 * (cot(q.alpha1) - cot(q.beta2)) * (cot(q.delta2) - cot(q.gamma1));
  const double by_sides_ab_cd =
      0.25 * (cot(q.delta1) - cot(q.alpha2)) * (cot(q.gamma2) - cot(q.beta1));
  return {by_vertices, by_sides_da_bc, by_sides_ab_cd};
}

double constructed_area_ratio(const Configuration& c) {
  if (c.geometry != Geometry::Euclidean || c.dim != 2)
    throw Error(ErrorCode::UnsupportedDimension, "area ratio needs a planar configuration");
  const Configuration next = next_generation(c);
  return euclid::signed_area(next.points) / euclid::signed_area(c.points);
}

}  // namespace pbc

#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's solvers.

#include "pbc/configuration.hpp"
#include "pbc/sampling.hpp"

#include <Eigen/QR>

#include <cmath>
#include <initializer_list>
#include <vector>

namespace pbc::test {

inline PointSet<double> columns(std::initializer_list<std::initializer_list<double>> pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  const auto d = static_cast<Eigen::Index>(pts.begin()->size());
  PointSet<double> out(d, n);
  Eigen::Index j = 0;
  for (const auto& p : pts) {
    Eigen::Index i = 0;
    for (double x : p) out(i++, j) = x;
    ++j;
  }
  return out;
}

inline Configuration euclidean_config(std::initializer_list<std::initializer_list<double>> pts) {
  Configuration c;
  c.geometry = Geometry::Euclidean;
  c.points = columns(pts);
  c.dim = static_cast<int>(c.points.rows());
  return c;
}

inline Configuration hyperbolic_from_disk(const PointSet<double>& disk) {
  Configuration c;
  c.geometry = Geometry::Hyperbolic;
  c.dim = static_cast<int>(disk.rows());
  c.points.resize(disk.rows() + 1, disk.cols());
  for (Eigen::Index i = 0; i < disk.cols(); ++i) {
    const double s = disk.col(i).squaredNorm();
    c.points.col(i).head(disk.rows()) = 2 * disk.col(i) / (1 - s);
    c.points(disk.rows(), i) = (1 + s) / (1 - s);
  }
  return c;
}

// Circumcenter of a planar triangle from the textbook determinant formula.
inline Eigen::Vector2d triangle_circumcenter(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                             const Eigen::Vector2d& c) {
  const double d = 2 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) + c.x() * (a.y() - b.y()));
  const double a2 = a.squaredNorm(), b2 = b.squaredNorm(), c2 = c.squaredNorm();
  return {(a2 * (b.y() - c.y()) + b2 * (c.y() - a.y()) + c2 * (a.y() - b.y())) / d,
          (a2 * (c.x() - b.x()) + b2 * (a.x() - c.x()) + c2 * (b.x() - a.x())) / d};
}

// Signed distance from p to the line through u and v, positive on the side
// of `inside`.
inline double side_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& u, const Eigen::Vector2d& v,
                            const Eigen::Vector2d& inside) {
  const Eigen::Vector2d e = (v - u).normalized();
  auto signed_dist = [&](const Eigen::Vector2d& x) { return e.x() * (x - u).y() - e.y() * (x - u).x(); };
  const double s = signed_dist(p);
  return signed_dist(inside) > 0 ? s : -s;
}

// Isogonal conjugate in a triangle by inverting trilinear coordinates.
inline Eigen::Vector2d trilinear_isogonal_conjugate(const Eigen::Vector2d& A, const Eigen::Vector2d& B,
                                                    const Eigen::Vector2d& C, const Eigen::Vector2d& p) {
  const double x = side_distance(p, B, C, A);
  const double y = side_distance(p, C, A, B);
  const double z = side_distance(p, A, B, C);
  const double a = (B - C).norm(), b = (C - A).norm(), c = (A - B).norm();
  const double u = 1 / x, v = 1 / y, w = 1 / z;
  return (a * u * A + b * v * B + c * w * C) / (a * u + b * v + c * w);
}

inline double disk_distance(const Vector<double>& u, const Vector<double>& v) {
  return std::acosh(1 + 2 * (u - v).squaredNorm() / ((1 - u.squaredNorm()) * (1 - v.squaredNorm())));
}

inline double sphere_distance(const Vector<double>& p, const Vector<double>& q) {
  const Eigen::Vector3d a = p, b = q;
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

inline double tetra_volume(const Vector<double>& a, const Vector<double>& b, const Vector<double>& c,
                           const Vector<double>& d) {
  Eigen::Matrix3d m;
  m << b - a, c - a, d - a;
  return std::abs(m.determinant()) / 6;
}

// Volume of the convex hull of five points in convex position in R^3: half
// the sum of the five tetrahedra obtained by omitting one point.
inline double five_point_hull_volume(const PointSet<double>& p) {
  double sum = 0;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<Vector<double>> rest;
    for (int k = 0; k < 5; ++k)
      if (k != skip) rest.push_back(p.col(k));
    sum += tetra_volume(rest[0], rest[1], rest[2], rest[3]);
  }
  return sum / 2;
}

inline Matrix<double> random_rotation(sampling::Rng& rng, int n) {
  std::normal_distribution<double> normal;
  Matrix<double> m(n, n);
  for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = normal(rng);
  Eigen::HouseholderQR<Matrix<double>> qr(m);
  Matrix<double> q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1;
  return q;
}

// Lorentz boost of the hyperboloid along a unit spatial direction.
inline Matrix<double> boost(const Vector<double>& dir, double rapidity) {
  const Eigen::Index d = dir.size();
  Matrix<double> m = Matrix<double>::Identity(d + 1, d + 1);
  m.topLeftCorner(d, d) += (std::cosh(rapidity) - 1) * dir * dir.transpose();
  m.topRightCorner(d, 1) = std::sinh(rapidity) * dir;
  m.bottomLeftCorner(1, d) = std::sinh(rapidity) * dir.transpose();
  m(d, d) = std::cosh(rapidity);
  return m;
}

inline double max_vertex_distance(const Configuration& a, const Configuration& b) {
  double worst = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    worst = std::max(worst, distance(a.geometry, a.points.col(i), b.points.col(i)));
  return worst;
}

}  // namespace pbc::test

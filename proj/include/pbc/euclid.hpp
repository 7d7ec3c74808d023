#pragma once

// Flat d-dimensional primitives: mediators, reflections, circumcenters,
// affine-dependence predicates and polytope volumes.

#include "pbc/common.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace pbc::euclid {

/// Oriented hyperplane {x : normal . x = offset} with |normal| = 1.
template <typename Scalar>
struct Hyperplane {
  Vector<Scalar> normal;
  Scalar offset{0};

  template <typename Derived>
  Scalar evaluate(const Eigen::MatrixBase<Derived>& x) const {
    return normal.dot(x) - offset;
  }
};

/// Result of a circumcenter solve. An ideal hypersphere has its center at
/// infinity; `direction` then holds the unit normal of the affine hull of the
/// defining points, i.e. the direction class of the center.
template <typename Scalar>
struct Hypersphere {
  enum class Kind { Ordinary, Ideal };

  Kind kind{Kind::Ordinary};
  Vector<Scalar> center;
  Scalar radius{0};
  Vector<Scalar> direction;

  bool is_ideal() const { return kind == Kind::Ideal; }

  static Hypersphere ordinary(Vector<Scalar> c, Scalar r) {
    return {Kind::Ordinary, std::move(c), r, {}};
  }
  static Hypersphere ideal(Vector<Scalar> dir) {
    return {Kind::Ideal, {}, Scalar(0), std::move(dir)};
  }
};

template <typename Derived>
typename Derived::Scalar diameter(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  Scalar best{0};
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    for (Eigen::Index j = i + 1; j < points.cols(); ++j)
      best = std::max(best, (points.col(i) - points.col(j)).norm());
  return best;
}

namespace detail {

template <typename Derived>
typename Derived::Scalar coordinate_scale(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  return std::max(Scalar(1), points.cwiseAbs().maxCoeff());
}

// Unit vector spanning the (numerical) null space of the rows of `m`, taken
// as the right singular vector of the smallest singular value.
template <typename Scalar>
Vector<Scalar> null_vector(const Matrix<Scalar>& m) {
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(svd.matrixV().cols() - 1);
}

template <typename Derived>
void require_distinct(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Scalar limit = Scalar(tol::kCoincident) * std::max(Scalar(1), diameter(points));
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    for (Eigen::Index j = i + 1; j < points.cols(); ++j)
      if ((points.col(i) - points.col(j)).norm() <= limit)
        throw Error(ErrorCode::DuplicatePoints,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

}  // namespace detail

/// Perpendicular bisector hyperplane of segment pq, oriented so that q lies on
/// the positive side.
template <typename DerivedP, typename DerivedQ>
Hyperplane<typename DerivedP::Scalar> mediator(const Eigen::MatrixBase<DerivedP>& p,
                                               const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  Vector<Scalar> diff = q - p;
  const Scalar len = diff.norm();
  const Scalar scale = std::max({Scalar(1), p.cwiseAbs().maxCoeff(), q.cwiseAbs().maxCoeff()});
  if (!(len > Scalar(tol::kCoincident) * scale))
    throw Error(ErrorCode::CoincidentPoints, "mediator of coincident points");
  Vector<Scalar> normal = diff / len;
  const Scalar offset = normal.dot((p + q) / Scalar(2));
  return {std::move(normal), offset};
}

template <typename Derived>
Vector<typename Derived::Scalar> reflect(const Eigen::MatrixBase<Derived>& p,
                                         const Hyperplane<typename Derived::Scalar>& h) {
  using Scalar = typename Derived::Scalar;
  return p - (Scalar(2) * h.evaluate(p)) * h.normal;
}

/// Hyperplane through d affinely independent points of R^d (the facet
/// spanned by the columns).
template <typename Derived>
Hyperplane<typename Derived::Scalar> affine_hyperplane(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = points.rows();
  Matrix<Scalar> diffs(points.cols() - 1, d);
  for (Eigen::Index i = 1; i < points.cols(); ++i)
    diffs.row(i - 1) = (points.col(i) - points.col(0)).transpose();
  Vector<Scalar> normal = detail::null_vector<Scalar>(diffs);
  const Scalar offset = normal.dot(points.col(0));
  return {std::move(normal), offset};
}

/// Determinant of the (d+1)x(d+1) matrix whose rows are (x_i, 1). It vanishes
/// exactly when the d+1 points are affinely dependent and equals d! times the
/// signed simplex volume.
template <typename Derived>
typename Derived::Scalar affine_dependence_cofactor(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = points.rows();
  Matrix<Scalar> m(d + 1, d + 1);
  m.leftCols(d) = points.transpose();
  m.col(d).setOnes();
  return m.determinant();
}

/// Threshold below which |affine_dependence_cofactor| counts as zero.
template <typename Derived>
typename Derived::Scalar degeneracy_threshold(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  return Scalar(tol::kDegeneracy) * std::pow(diameter(points), Scalar(points.rows()));
}

template <typename Derived>
bool affinely_dependent(const Eigen::MatrixBase<Derived>& points) {
  return std::abs(affine_dependence_cofactor(points)) <= degeneracy_threshold(points);
}

/// Hypersphere through d+1 points of R^d. Solves the mediator system
///   2 (p_i - p_0) . y = |p_i - p_0|^2,   center = p_0 + y,
/// whose determinant is 2^d times the affine-dependence cofactor.
template <typename Derived>
Hypersphere<typename Derived::Scalar> circumcenter(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = points.rows();
  if (points.cols() != d + 1)
    throw Error(ErrorCode::DegenerateInput, "circumcenter needs d+1 points in dimension d");
  detail::require_distinct(points);

  Matrix<Scalar> a(d, d);
  Vector<Scalar> b(d);
  for (Eigen::Index i = 1; i <= d; ++i) {
    const Vector<Scalar> diff = points.col(i) - points.col(0);
    a.row(i - 1) = Scalar(2) * diff.transpose();
    b(i - 1) = diff.squaredNorm();
  }
  Eigen::FullPivLU<Matrix<Scalar>> lu(a);
  const Scalar cofactor = lu.determinant() / std::pow(Scalar(2), Scalar(d));
  if (std::abs(cofactor) <= degeneracy_threshold(points))
    return Hypersphere<Scalar>::ideal(detail::null_vector<Scalar>(a));

  Vector<Scalar> center = points.col(0) + lu.solve(b);
  const Scalar radius = (center - points.col(0)).norm();
  return Hypersphere<Scalar>::ordinary(std::move(center), radius);
}

/// Columns of `points` with column `skip` removed, keeping cyclic order
/// starting after `skip`.
template <typename Derived>
Matrix<typename Derived::Scalar> omit_cyclic(const Eigen::MatrixBase<Derived>& points,
                                             Eigen::Index skip) {
  const Eigen::Index n = points.cols();
  Matrix<typename Derived::Scalar> out(points.rows(), n - 1);
  for (Eigen::Index k = 1; k < n; ++k) out.col(k - 1) = points.col((skip + k) % n);
  return out;
}

/// Indices i such that the n-1 points other than i are affinely dependent.
template <typename Derived>
std::vector<int> dependent_subsets(const Eigen::MatrixBase<Derived>& points) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    if (affinely_dependent(omit_cyclic(points, i))) out.push_back(static_cast<int>(i));
  return out;
}

/// Largest relative deviation of the n points from the hypersphere through
/// the best-conditioned n-1 of them. Zero for conhyperspherical input.
template <typename Derived>
typename Derived::Scalar conhyperspherical_deviation(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  if (n != points.rows() + 2)
    throw Error(ErrorCode::DegenerateInput, "conhypersphericity needs d+2 points");
  Eigen::Index best = -1;
  Scalar best_cof{0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix<Scalar> sub = omit_cyclic(points, i);
    const Scalar cof = std::abs(affine_dependence_cofactor(sub));
    if (cof <= degeneracy_threshold(sub))
      throw Error(ErrorCode::DegenerateInput,
                  "points other than " + std::to_string(i) + " are affinely dependent");
    if (cof > best_cof) {
      best_cof = cof;
      best = i;
    }
  }
  const auto sphere = circumcenter(omit_cyclic(points, best));
  Scalar dev{0};
  for (Eigen::Index i = 0; i < n; ++i)
    dev = std::max(dev, std::abs((points.col(i) - sphere.center).norm() - sphere.radius));
  return dev / sphere.radius;
}

template <typename Derived>
bool is_conhyperspherical(const Eigen::MatrixBase<Derived>& points,
                          typename Derived::Scalar tolerance = tol::kVerify) {
  return conhyperspherical_deviation(points) <= tolerance;
}

/// Signed shoelace area of a closed planar polygon (positive when
/// counter-clockwise).
template <typename Derived>
typename Derived::Scalar signed_area(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  Scalar twice{0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = (i + 1) % n;
    twice += points(0, i) * points(1, j) - points(1, i) * points(0, j);
  }
  return twice / Scalar(2);
}

namespace detail {

template <typename Scalar>
Scalar cross2(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return a(0) * b(1) - a(1) * b(0);
}

template <typename Scalar>
bool segments_cross(const Vector<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& c,
                    const Vector<Scalar>& d) {
  const Scalar d1 = cross2<Scalar>(b - a, c - a);
  const Scalar d2 = cross2<Scalar>(b - a, d - a);
  const Scalar d3 = cross2<Scalar>(d - c, a - c);
  const Scalar d4 = cross2<Scalar>(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace detail

/// True when two non-adjacent edges of the closed polygon properly cross.
template <typename Derived>
bool polygon_self_intersects(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (detail::segments_cross<Scalar>(points.col(i), points.col((i + 1) % n), points.col(j),
                                         points.col((j + 1) % n)))
        return true;
    }
  }
  return false;
}

namespace detail {

// Andrew's monotone chain on 2-D coordinates; returns hull vertex indices in
// counter-clockwise order with collinear points dropped.
template <typename Scalar>
std::vector<int> hull2d(const std::vector<Eigen::Matrix<Scalar, 2, 1>>& pts, Scalar eps) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a](0) < pts[b](0) || (pts[a](0) == pts[b](0) && pts[a](1) < pts[b](1));
  });
  auto turn = [&](int o, int a, int b) {
    const auto u = pts[a] - pts[o];
    const auto v = pts[b] - pts[o];
    return u(0) * v(1) - u(1) * v(0);
  };
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= eps) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= eps) --k;
    hull[k++] = i;
  }
  hull.resize(k > 0 ? k - 1 : 0);
  return hull;
}

}  // namespace detail

/// Volume of the convex hull of points in R^3 that are in convex position.
/// Facets are found by brute force over point triples, so this is meant for
/// the handful of vertices a configuration carries.
template <typename Derived>
typename Derived::Scalar convex_hull_volume(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
  if (points.rows() != 3) throw Error(ErrorCode::UnsupportedDimension, "hull volume needs R^3");
  const int n = static_cast<int>(points.cols());
  if (n < 4) throw Error(ErrorCode::DegenerateInput, "hull needs at least four points");

  const Scalar diam = diameter(points);
  const Scalar eps = Scalar(1e-12) * diam * diam * diam;
  const Vec3 interior = points.rowwise().mean();
  auto p = [&](int i) -> Vec3 { return points.col(i); };

  std::vector<std::vector<int>> facets;
  std::vector<bool> is_vertex(n, false);
  Scalar volume{0};

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 normal = (p(j) - p(i)).cross(p(k) - p(i));
        if (normal.norm() <= Scalar(1e-12) * diam * diam) continue;
        std::vector<int> on_plane;
        bool pos = false, neg = false;
        for (int m = 0; m < n; ++m) {
          const Scalar s = normal.dot(p(m) - p(i));
          if (std::abs(s) <= eps) on_plane.push_back(m);
          else if (s > 0) pos = true;
          else neg = true;
        }
        if (pos && neg) continue;
        if (!pos && !neg) throw Error(ErrorCode::DegenerateInput, "points are coplanar");
        if (std::find(facets.begin(), facets.end(), on_plane) != facets.end()) continue;
        facets.push_back(on_plane);

        // Order the facet's points in its own plane and fan-triangulate.
        const Vec3 u = (p(j) - p(i)).normalized();
        const Vec3 w = normal.normalized().cross(u);
        std::vector<Eigen::Matrix<Scalar, 2, 1>> flat;
        for (int m : on_plane) {
          const Vec3 r = p(m) - p(i);
          flat.emplace_back(r.dot(u), r.dot(w));
        }
        const auto ring = detail::hull2d<Scalar>(flat, Scalar(1e-12) * diam * diam);
        for (int r : ring) is_vertex[on_plane[r]] = true;
        for (std::size_t t = 1; t + 1 < ring.size(); ++t) {
          const Vec3 a = p(on_plane[ring[0]]) - interior;
          const Vec3 b = p(on_plane[ring[t]]) - interior;
          const Vec3 c = p(on_plane[ring[t + 1]]) - interior;
          volume += std::abs(a.dot(b.cross(c))) / Scalar(6);
        }
      }

  for (int m = 0; m < n; ++m)
    if (!is_vertex[m])
      throw Error(ErrorCode::NotInConvexPosition,
                  "point " + std::to_string(m) + " is not a hull vertex");
  return volume;
}

template <typename Scalar>
struct PolytopeVolume {
  Scalar volume{0};
  // d = 2 only: the cyclic vertex order has crossing edges, so `volume` is
  // the absolute shoelace value of a self-intersecting polygon.
  bool crossing{false};
};

/// |P| for a configuration polytope: the absolute shoelace area of the cyclic
/// vertex order in the plane, the convex-hull volume in R^3.
template <typename Derived>
PolytopeVolume<typename Derived::Scalar> polytope_volume(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  if (points.rows() == 2)
    return {std::abs(signed_area(points)), polygon_self_intersects(points)};
  if (points.rows() == 3) return {convex_hull_volume(points), false};
  throw Error(ErrorCode::UnsupportedDimension, "polytope volume needs d = 2 or d = 3");
  return {Scalar(0), false};
}

}  // namespace pbc::euclid

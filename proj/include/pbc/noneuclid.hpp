#pragma once

// Spherical and hyperbolic primitives. Spherical points are unit vectors of
// R^(d+1); hyperbolic points live on the upper sheet of the hyperboloid
// <x,x> = -1 with <x,y> = x_1 y_1 + ... + x_d y_d - x_{d+1} y_{d+1}.

#include "pbc/common.hpp"

#include <algorithm>
#include <cmath>

namespace pbc::noneuclid {

enum class Model { Spherical, Hyperbolic };

/// Bilinear form of the model: Euclidean dot product on the sphere,
/// Minkowski form on the hyperboloid.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar form(Model model, const Eigen::MatrixBase<DerivedA>& a,
                               const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index last = a.size() - 1;
  if (model == Model::Spherical) return a.dot(b);
  return a.head(last).dot(b.head(last)) - a(last) * b(last);
}

/// Multiplies the time coordinate by -1 in the hyperbolic model, so that
/// form(model, a, b) == a.dot(signature(model, b)).
template <typename Derived>
Vector<typename Derived::Scalar> signature(Model model, const Eigen::MatrixBase<Derived>& v) {
  Vector<typename Derived::Scalar> out = v;
  if (model == Model::Hyperbolic) out(out.size() - 1) = -out(out.size() - 1);
  return out;
}

template <typename Scalar>
struct GeodesicHyperplane {
  Model model{Model::Spherical};
  // Unit under the model form: |n| = 1 on the sphere, <n,n> = +1 hyperbolic.
  Vector<Scalar> normal;

  template <typename Derived>
  Scalar evaluate(const Eigen::MatrixBase<Derived>& x) const {
    return form(model, normal, x);
  }
};

/// Classification of a candidate circumcenter. Ideal and hyperideal only
/// occur in the hyperbolic model; `point` then holds the unnormalized
/// solution direction.
template <typename Scalar>
struct CenterClass {
  enum class Kind { Ordinary, Ideal, Hyperideal };

  Kind kind{Kind::Ordinary};
  Vector<Scalar> point;
  Scalar radius{0};

  bool is_ordinary() const { return kind == Kind::Ordinary; }
};

inline const char* to_string(CenterClass<double>::Kind kind) {
  switch (kind) {
    case CenterClass<double>::Kind::Ordinary: return "ordinary";
    case CenterClass<double>::Kind::Ideal: return "ideal";
    case CenterClass<double>::Kind::Hyperideal: return "hyperideal";
  }
  return "?";
}

template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar distance(Model model, const Eigen::MatrixBase<DerivedP>& p,
                                   const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.size() != q.size()) throw Error(ErrorCode::ModelMismatch, "points of different dimension");
  const Vector<Scalar> diff = p - q;
  if (model == Model::Spherical) {
    // chord length |p - q| = 2 sin(theta / 2); accurate for small and large angles
    const Scalar chord = std::min(diff.norm(), Scalar(2));
    return Scalar(2) * std::asin(chord / Scalar(2));
  }
  // <p-q, p-q> = 4 sinh^2(dist / 2) on the hyperboloid
  const Scalar sq = std::max(form(model, diff, diff), Scalar(0));
  return Scalar(2) * std::asinh(std::sqrt(sq) / Scalar(2));
}

namespace detail {

template <typename Scalar>
Scalar coincidence_limit() {
  return Scalar(tol::kCoincident);
}

// Right singular vectors and singular values of `m`.
template <typename Scalar>
Eigen::JacobiSVD<Matrix<Scalar>> svd_full(const Matrix<Scalar>& m) {
  return Eigen::JacobiSVD<Matrix<Scalar>>(m, Eigen::ComputeFullV);
}

}  // namespace detail

/// Equidistant locus of p and q. The normal is proportional to p - q, so p is
/// on the positive side.
template <typename DerivedP, typename DerivedQ>
GeodesicHyperplane<typename DerivedP::Scalar> mediator_ne(Model model,
                                                          const Eigen::MatrixBase<DerivedP>& p,
                                                          const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.size() != q.size()) throw Error(ErrorCode::ModelMismatch, "points of different dimension");
  const Vector<Scalar> diff = p - q;
  if (diff.norm() <= detail::coincidence_limit<Scalar>() * std::max(Scalar(1), p.norm()))
    throw Error(ErrorCode::CoincidentPoints, "mediator of coincident points");
  if (model == Model::Spherical && (p + q).norm() <= detail::coincidence_limit<Scalar>())
    throw Error(ErrorCode::AntipodalPoints, "mediator of antipodal points");
  const Scalar len = std::sqrt(form(model, diff, diff));
  return {model, diff / len};
}

template <typename Derived>
Vector<typename Derived::Scalar> reflect_ne(Model model, const Eigen::MatrixBase<Derived>& x,
                                            const GeodesicHyperplane<typename Derived::Scalar>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.model != model) throw Error(ErrorCode::ModelMismatch, "hyperplane from another model");
  if (h.normal.size() != x.size())
    throw Error(ErrorCode::ModelMismatch, "hyperplane of different dimension");
  return x - (Scalar(2) * h.evaluate(x)) * h.normal;
}

/// Geodesic hyperplane through d points (columns) of the d-dimensional model.
template <typename Derived>
GeodesicHyperplane<typename Derived::Scalar> hyperplane_through(
    Model model, const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> rows(points.cols(), points.rows());
  for (Eigen::Index j = 0; j < points.cols(); ++j)
    rows.row(j) = signature(model, points.col(j)).transpose();
  const auto svd = detail::svd_full<Scalar>(rows);
  // rows * v = 0 means form(v, p_j) = 0, so v is the model normal
  Vector<Scalar> n = svd.matrixV().col(svd.matrixV().cols() - 1);
  const Scalar q = form(model, n, n);
  if (q <= Scalar(0)) throw Error(ErrorCode::DegenerateInput, "facet is not a geodesic hyperplane");
  return {model, n / std::sqrt(q)};
}

/// Center of the hypersphere through d+1 points (columns of `points`).
///
/// Equidistance from all points is the linear condition form(c, p_i - p_0) = 0.
/// Spherical: the unit solution is fixed up to sign; the one nearer the points
/// (c . p_0 > 0) is returned, ties broken toward a positive last coordinate.
/// Hyperbolic: the solution line is classified as ordinary, ideal or
/// hyperideal by the sign of <c,c>.
template <typename Derived>
CenterClass<typename Derived::Scalar> circumcenter_ne(Model model,
                                                      const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  using Center = CenterClass<Scalar>;
  const Eigen::Index dim = points.rows() - 1;
  if (points.cols() != dim + 1)
    throw Error(ErrorCode::DegenerateInput, "circumcenter needs d+1 points");
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    for (Eigen::Index j = i + 1; j < points.cols(); ++j) {
      if ((points.col(i) - points.col(j)).norm() <=
          detail::coincidence_limit<Scalar>() * std::max(Scalar(1), points.col(i).norm()))
        throw Error(ErrorCode::DuplicatePoints, "coincident points");
      if (model == Model::Spherical &&
          (points.col(i) + points.col(j)).norm() <= detail::coincidence_limit<Scalar>())
        throw Error(ErrorCode::AntipodalPoints, "antipodal points");
    }

  Matrix<Scalar> rows(dim, dim + 1);
  for (Eigen::Index i = 1; i <= dim; ++i)
    rows.row(i - 1) = signature(model, points.col(i) - points.col(0)).transpose();
  const auto svd = detail::svd_full<Scalar>(rows);
  const auto& sv = svd.singularValues();
  if (sv(dim - 1) <= Scalar(tol::kRank) * sv(0))
    throw Error(ErrorCode::DegenerateInput, "equidistance system is rank-deficient");
  Vector<Scalar> c = svd.matrixV().col(dim);

  if (model == Model::Spherical) {
    c.normalize();
    const Scalar side = c.dot(points.col(0));
    if (side < -Scalar(1e-12) || (std::abs(side) <= Scalar(1e-12) && c(dim) < 0)) c = -c;
    const Scalar r = distance(model, c, points.col(0));
    return {Center::Kind::Ordinary, std::move(c), r};
  }

  const Scalar q = form(model, c, c);
  if (std::abs(q) <= Scalar(tol::kIdeal) * c.squaredNorm()) return {Center::Kind::Ideal, c, 0};
  if (q > 0) return {Center::Kind::Hyperideal, c, 0};
  c /= std::sqrt(-q);
  if (c(dim) < 0) c = -c;
  const Scalar r = distance(model, c, points.col(0));
  return {Center::Kind::Ordinary, std::move(c), r};
}

/// Perpendicularity as conjugacy of the normals under the model form.
template <typename Scalar>
bool perpendicular_check(const GeodesicHyperplane<Scalar>& h1, const GeodesicHyperplane<Scalar>& h2,
                         Scalar tolerance = Scalar(tol::kRank)) {
  if (h1.model != h2.model) throw Error(ErrorCode::ModelMismatch, "hyperplanes from two models");
  return std::abs(form(h1.model, h1.normal, h2.normal)) <= tolerance;
}

/// Hyperboloid point to the Poincare ball: x -> (x_1..x_d) / (1 + x_{d+1}).
template <typename Derived>
Vector<typename Derived::Scalar> to_poincare(const Eigen::MatrixBase<Derived>& p) {
  const Eigen::Index d = p.size() - 1;
  return p.head(d) / (typename Derived::Scalar(1) + p(d));
}

template <typename Derived>
Vector<typename Derived::Scalar> from_poincare(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Scalar s = x.squaredNorm();
  if (!(s < Scalar(1))) throw Error(ErrorCode::OutsideDisk, "point is not inside the unit ball");
  const Scalar denom = Scalar(1) - s;
  Vector<Scalar> out(x.size() + 1);
  out.head(x.size()) = (Scalar(2) / denom) * x;
  out(x.size()) = (Scalar(1) + s) / denom;
  return out;
}

/// Point at hyperbolic distance `t` from the origin (0,..,0,1) along the
/// unit Euclidean direction `dir` of R^d.
template <typename Derived>
Vector<typename Derived::Scalar> hyperbolic_exp_origin(const Eigen::MatrixBase<Derived>& dir,
                                                       typename Derived::Scalar t) {
  Vector<typename Derived::Scalar> out(dir.size() + 1);
  out.head(dir.size()) = std::sinh(t) * dir.normalized();
  out(dir.size()) = std::cosh(t);
  return out;
}

/// Largest pairwise geodesic distance.
template <typename Derived>
typename Derived::Scalar diameter_ne(Model model, const Eigen::MatrixBase<Derived>& points) {
  typename Derived::Scalar best{0};
  for (Eigen::Index i = 0; i < points.cols(); ++i)
    for (Eigen::Index j = i + 1; j < points.cols(); ++j)
      best = std::max(best, distance(model, points.col(i), points.col(j)));
  return best;
}

/// True when some unit vector u has u . p > 0 for every column p, searched by
/// perceptron updates starting from the normalized mean.
template <typename Derived>
bool in_open_hemisphere(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  Vector<Scalar> u = points.rowwise().sum();
  if (u.norm() == Scalar(0)) u = points.col(0);
  u.normalize();
  for (int iter = 0; iter < 1000; ++iter) {
    Eigen::Index worst = 0;
    const Scalar worst_val = (u.transpose() * points).minCoeff(&worst);
    if (worst_val > Scalar(0)) return true;
    u += points.col(worst);
    if (u.norm() == Scalar(0)) return false;
    u.normalize();
  }
  return false;
}

}  // namespace pbc::noneuclid

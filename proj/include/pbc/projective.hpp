#pragma once

// Homogeneous-coordinate machinery on RP^d: polarity with respect to a
// quadric, pole/polar, conjugacy and incidence of flats.

#include "pbc/common.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace pbc::projective {

template <typename Scalar>
using HomPoint = Vector<Scalar>;

template <typename Scalar>
using HomHyperplane = Vector<Scalar>;

/// Representative with the largest-magnitude coordinate equal to +1.
template <typename Derived>
Vector<typename Derived::Scalar> canonical(const Eigen::MatrixBase<Derived>& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  return v / v(k);
}

/// Projective equality: canonical representatives agree to `tolerance`.
template <typename DerivedA, typename DerivedB>
bool same_point(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                typename DerivedA::Scalar tolerance) {
  return (canonical(a) - canonical(b)).cwiseAbs().maxCoeff() <= tolerance;
}

/// Symmetric invertible matrix fixing a quadric of self-conjugate points.
template <typename Scalar>
class Polarity {
 public:
  explicit Polarity(Matrix<Scalar> g) : g_(std::move(g)), lu_(g_) {
    if (g_.rows() != g_.cols()) throw Error(ErrorCode::InvalidPolarity, "matrix is not square");
    const Scalar scale = g_.cwiseAbs().maxCoeff();
    if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale)
      throw Error(ErrorCode::InvalidPolarity, "matrix is not symmetric");
    const auto sv = Eigen::JacobiSVD<Matrix<Scalar>>(g_).singularValues();
    if (!(sv(sv.size() - 1) > Scalar(tol::kRank) * sv(0)))
      throw Error(ErrorCode::InvalidPolarity, "matrix is singular");
  }

  const Matrix<Scalar>& matrix() const { return g_; }
  Eigen::Index dim() const { return g_.rows() - 1; }

  HomHyperplane<Scalar> polar(const HomPoint<Scalar>& p) const { return g_ * p; }
  HomPoint<Scalar> pole(const HomHyperplane<Scalar>& h) const { return lu_.solve(h); }

 private:
  Matrix<Scalar> g_;
  Eigen::PartialPivLU<Matrix<Scalar>> lu_;
};

template <typename Scalar>
HomHyperplane<Scalar> polar(const HomPoint<Scalar>& p, const Polarity<Scalar>& g) {
  return g.polar(p);
}

template <typename Scalar>
HomPoint<Scalar> pole(const HomHyperplane<Scalar>& h, const Polarity<Scalar>& g) {
  return g.pole(h);
}

/// p^T G q = 0, relative to |p| |G| |q|.
template <typename Scalar>
bool conjugate_points(const HomPoint<Scalar>& p, const HomPoint<Scalar>& q,
                      const Polarity<Scalar>& g, Scalar tolerance = Scalar(tol::kRank)) {
  const Scalar value = p.dot(g.matrix() * q);
  const Scalar scale = p.norm() * g.matrix().norm() * q.norm();
  return std::abs(value) <= tolerance * scale;
}

/// A k-flat stored as the span of k+1 homogeneous points (columns).
template <typename Scalar>
struct Flat {
  Matrix<Scalar> span;

  Eigen::Index ambient() const { return span.rows(); }
  Eigen::Index dimension() const { return span.cols() - 1; }
};

namespace detail {

// Rank and right null space of the row-normalized matrix `m`.
template <typename Scalar>
struct NullSpace {
  Eigen::Index rank{0};
  Matrix<Scalar> basis;
  Vector<Scalar> singular_values;
};

template <typename Scalar>
NullSpace<Scalar> null_space(Matrix<Scalar> m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Scalar len = m.row(i).norm();
    if (len > 0) m.row(i) /= len;
  }
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return {0, Matrix<Scalar>::Identity(cols, cols), Vector<Scalar>()};
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > Scalar(tol::kRank) * sv(0)) ++rank;
  return {rank, svd.matrixV().rightCols(cols - rank), sv};
}

}  // namespace detail

/// Points spanning the hyperplane h (its null space).
template <typename Scalar>
Flat<Scalar> flat_of_hyperplane(const HomHyperplane<Scalar>& h) {
  Matrix<Scalar> row = h.transpose();
  return {detail::null_space<Scalar>(row).basis};
}

/// Intersection of hyperplanes given as columns of `planes`.
template <typename Scalar>
Flat<Scalar> meet(const Matrix<Scalar>& planes) {
  return {detail::null_space<Scalar>(planes.transpose()).basis};
}

/// Polar of a flat: the intersection of the polars of its spanning points.
template <typename Scalar>
Flat<Scalar> polar_flat(const Flat<Scalar>& f, const Polarity<Scalar>& g) {
  return meet<Scalar>(g.matrix() * f.span);
}

/// Hyperplanes through the flat f (null space of its span), as columns.
template <typename Scalar>
Matrix<Scalar> annihilator(const Flat<Scalar>& f) {
  return detail::null_space<Scalar>(f.span.transpose()).basis;
}

/// Hyperplane containing every spanning point of every flat, if the stacked
/// incidence system has numerical rank at most d.
template <typename Scalar>
std::optional<HomHyperplane<Scalar>> flats_on_common_hyperplane(const std::vector<Flat<Scalar>>& flats) {
  if (flats.empty()) return std::nullopt;
  const Eigen::Index ambient = flats.front().ambient();
  Eigen::Index rows = 0;
  for (const auto& f : flats) {
    if (f.ambient() != ambient) throw Error(ErrorCode::ModelMismatch, "flats of different spaces");
    rows += f.span.cols();
  }
  Matrix<Scalar> stacked(rows, ambient);
  Eigen::Index r = 0;
  for (const auto& f : flats)
    for (Eigen::Index j = 0; j < f.span.cols(); ++j) stacked.row(r++) = f.span.col(j).transpose();
  const auto ns = detail::null_space<Scalar>(stacked);
  if (ns.rank >= ambient) return std::nullopt;
  return canonical(Vector<Scalar>(ns.basis.col(ns.basis.cols() - 1)));
}

/// Common point of lines (1-flats), if the union of their annihilators leaves
/// a one-dimensional solution.
template <typename Scalar>
std::optional<HomPoint<Scalar>> lines_concurrent(const std::vector<Flat<Scalar>>& lines) {
  if (lines.empty()) return std::nullopt;
  const Eigen::Index ambient = lines.front().ambient();
  std::vector<Matrix<Scalar>> constraints;
  Eigen::Index rows = 0;
  for (const auto& l : lines) {
    if (l.ambient() != ambient) throw Error(ErrorCode::ModelMismatch, "lines of different spaces");
    if (l.span.cols() != 2) throw Error(ErrorCode::DegenerateInput, "a line needs two points");
    constraints.push_back(annihilator(l).transpose());
    rows += constraints.back().rows();
  }
  Matrix<Scalar> stacked(rows, ambient);
  Eigen::Index r = 0;
  for (const auto& c : constraints) {
    stacked.middleRows(r, c.rows()) = c;
    r += c.rows();
  }
  const auto ns = detail::null_space<Scalar>(stacked);
  if (ns.rank >= ambient) return std::nullopt;
  return canonical(Vector<Scalar>(ns.basis.col(ns.basis.cols() - 1)));
}

/// Line through two homogeneous points.
template <typename Scalar>
Flat<Scalar> join(const HomPoint<Scalar>& a, const HomPoint<Scalar>& b) {
  Matrix<Scalar> span(a.size(), 2);
  span << a, b;
  return {std::move(span)};
}

}  // namespace pbc::projective

#include "pbc/fitting.hpp"

#include "pbc/construction.hpp"
#include "pbc/euclid.hpp"
#include "pbc/noneuclid.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace pbc {

std::string_view to_string(CenterKind k) {
  switch (k) {
    case CenterKind::Ordinary: return "ordinary";
    case CenterKind::Ideal: return "ideal";
    case CenterKind::Hyperideal: return "hyperideal";
  }
  return "?";
}

namespace {

void require_compatible(const Configuration& a, const Configuration& b) {
  if (a.geometry != b.geometry || a.dim != b.dim || a.size() != b.size() ||
      a.points.rows() != b.points.rows())
    throw Error(ErrorCode::ModelMismatch, "configurations differ in geometry, dimension or size");
}

// Smallest-eigenvalue eigenvector of a symmetric positive semidefinite matrix.
std::pair<double, Vector<double>> smallest_eigen(const Matrix<double>& m, double* largest = nullptr) {
  Eigen::SelfAdjointEigenSolver<Matrix<double>> es(m);
  if (largest) *largest = es.eigenvalues()(es.eigenvalues().size() - 1);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

PerspectivityResult euclidean_perspectivity(const Configuration& a, const Configuration& b,
                                            PerspectivityResult result) {
  const Eigen::Index d = a.points.rows();
  const Vector<double> origin = a.points.rowwise().mean();
  const Matrix<double> identity = Matrix<double>::Identity(d, d);

  std::vector<Vector<double>> dirs;
  Matrix<double> m = Matrix<double>::Zero(d, d);
  Vector<double> rhs = Vector<double>::Zero(d);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Vector<double> u = (b.points.col(i) - a.points.col(i)).normalized();
    const Matrix<double> proj = identity - u * u.transpose();
    m += proj;
    rhs += proj * (a.points.col(i) - origin);
    dirs.push_back(u);
  }

  double largest = 0;
  const auto [smallest, v] = smallest_eigen(m, &largest);
  if (smallest <= 1e-13 * largest) {
    // All lines parallel: perspective from the point at infinity in direction v.
    result.kind = CenterKind::Ideal;
    result.center = v;
    double worst = 0;
    for (const auto& u : dirs) worst = std::max(worst, (u - u.dot(v) * v).norm());
    result.max_line_residual = worst * result.scale;
    return result;
  }

  const Vector<double> x = m.ldlt().solve(rhs);
  double worst = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Vector<double> r = x - (a.points.col(i) - origin);
    worst = std::max(worst, (r - r.dot(dirs[i]) * dirs[i]).norm());
  }
  result.kind = CenterKind::Ordinary;
  result.center = x + origin;
  result.max_line_residual = worst;
  return result;
}

PerspectivityResult spherical_perspectivity(const Configuration& a, const Configuration& b,
                                            PerspectivityResult result) {
  const Eigen::Index n = a.points.rows();
  const Matrix<double> identity = Matrix<double>::Identity(n, n);
  std::vector<Matrix<double>> complements;
  Matrix<double> m = Matrix<double>::Zero(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Matrix<double> basis(n, 2);
    basis.col(0) = a.points.col(i).normalized();
    Vector<double> second = b.points.col(i) - b.points.col(i).dot(basis.col(0)) * basis.col(0);
    basis.col(1) = second.normalized();
    complements.push_back(identity - basis * basis.transpose());
    m += complements.back();
  }
  Vector<double> w = smallest_eigen(m).second;
  if (w.dot(a.points.rowwise().sum() + b.points.rowwise().sum()) < 0) w = -w;

  double worst = 0;
  for (const auto& c : complements) worst = std::max(worst, std::asin(std::min(1.0, (c * w).norm())));
  result.kind = CenterKind::Ordinary;
  result.center = w;
  result.max_line_residual = worst;
  return result;
}

PerspectivityResult hyperbolic_perspectivity(const Configuration& a, const Configuration& b,
                                             PerspectivityResult result) {
  using noneuclid::Model;
  const Eigen::Index n = a.points.rows();
  // For each geodesic, a Minkowski-orthonormal basis of the spacelike normal
  // space of its plane, pre-multiplied by the signature so that a plain dot
  // product with w evaluates the form.
  std::vector<Matrix<double>> normals;
  Matrix<double> m = Matrix<double>::Zero(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Matrix<double> rows(2, n);
    rows.row(0) = noneuclid::signature(Model::Hyperbolic, a.points.col(i)).transpose();
    rows.row(1) = noneuclid::signature(Model::Hyperbolic, b.points.col(i)).transpose();
    Eigen::JacobiSVD<Matrix<double>> svd(rows, Eigen::ComputeFullV);
    const Matrix<double> basis = svd.matrixV().rightCols(n - 2);
    Matrix<double> signed_basis = basis;
    signed_basis.row(n - 1) *= -1.0;
    const Matrix<double> gram = basis.transpose() * signed_basis;
    const Matrix<double> lower = gram.llt().matrixL();
    // columns of signed_basis * L^-T are J m_k for a Minkowski-orthonormal m_k
    Matrix<double> evaluators = lower.triangularView<Eigen::Lower>().solve(signed_basis.transpose()).transpose();
    m += evaluators * evaluators.transpose();
    normals.push_back(std::move(evaluators));
  }
  Vector<double> w = smallest_eigen(m).second;
  const double q = noneuclid::form(Model::Hyperbolic, w, w);

  double worst = 0;
  if (q < -tol::kIdeal) {
    w /= std::sqrt(-q);
    if (w(n - 1) < 0) w = -w;
    for (const auto& e : normals) worst = std::max(worst, std::asinh((e.transpose() * w).norm()));
    result.kind = CenterKind::Ordinary;
  } else {
    for (const auto& e : normals) worst = std::max(worst, (e.transpose() * w).norm());
    result.kind = q > tol::kIdeal ? CenterKind::Hyperideal : CenterKind::Ideal;
  }
  result.center = w;
  result.max_line_residual = worst;
  return result;
}

}  // namespace

PerspectivityResult perspectivity(const Configuration& a, const Configuration& b) {
  require_compatible(a, b);
  PerspectivityResult result;
  result.scale = diameter(a);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (distance(a.geometry, a.points.col(i), b.points.col(i)) <= 1e-12 * result.scale)
      throw Error(ErrorCode::LinesDegenerate,
                  "V" + std::to_string(i + 1) + " coincides in both configurations");
    result.lines.emplace_back(a.points.col(i), b.points.col(i));
  }
  switch (a.geometry) {
    case Geometry::Euclidean: return euclidean_perspectivity(a, b, std::move(result));
    case Geometry::Spherical: return spherical_perspectivity(a, b, std::move(result));
    case Geometry::Hyperbolic: return hyperbolic_perspectivity(a, b, std::move(result));
  }
  return result;
}

HomothetyResult homothety(const Configuration& a, const Configuration& b, double tolerance) {
  require_compatible(a, b);
  if (a.geometry != Geometry::Euclidean)
    throw Error(ErrorCode::ModelMismatch, "homothety is only fitted in Euclidean geometry");

  // With the translation free, the least-squares ratio is the centered
  // cross-covariance over the centered source variance.
  const Vector<double> source_mean = a.points.rowwise().mean();
  const Vector<double> target_mean = b.points.rowwise().mean();
  const Matrix<double> s = a.points.colwise() - source_mean;
  const Matrix<double> t = b.points.colwise() - target_mean;
  const double variance = s.squaredNorm();
  if (!(variance > 0)) throw Error(ErrorCode::NotHomothetic, "source configuration is a single point");
  const double ratio = (s.array() * t.array()).sum() / variance;
  if (std::abs(1.0 - ratio) <= 1e-12)
    throw Error(ErrorCode::NotHomothetic, "best fit is a translation");

  // b_i = ratio * a_i + (1 - ratio) * center, written relative to source_mean
  const Vector<double> offset = target_mean - source_mean;
  HomothetyResult result;
  result.ratio = ratio;
  result.center = source_mean + offset / (1.0 - ratio);
  result.scale = std::max(euclid::diameter(a.points), euclid::diameter(b.points));
  for (Eigen::Index i = 0; i < a.size(); ++i)
    result.max_residual = std::max(result.max_residual, (t.col(i) - ratio * s.col(i)).norm());
  if (result.max_residual > tolerance * result.scale)
    throw Error(ErrorCode::NotHomothetic, "residual " + std::to_string(result.max_residual) +
                                              " exceeds tolerance");
  return result;
}

IsopticResult isoptic_point(const Configuration& c, double tolerance) {
  if (c.geometry != Geometry::Euclidean)
    throw Error(ErrorCode::ModelMismatch, "the isoptic point is computed in Euclidean geometry");
  const Configuration n2 = next_generation(c);
  const Configuration n3 = next_generation(n2);
  const Configuration n4 = next_generation(n3);
  const auto odd = homothety(c, n3, tolerance);
  const auto even = homothety(n2, n4, tolerance);

  IsopticResult result;
  const double scale = euclid::diameter(c.points);
  result.point = odd.center;
  result.even_point = even.center;
  result.agreement = (odd.center - even.center).norm() / scale;
  result.odd_ratio = odd.ratio;
  result.even_ratio = even.ratio;
  result.volume_ratio = std::pow(std::abs(odd.ratio), -static_cast<double>(c.dim));
  result.forward_converges = result.volume_ratio > 1.0;

  result.limit_distance = std::numeric_limits<double>::quiet_NaN();
  Configuration current = c;
  for (int step = 1; step <= 200; ++step) {
    try {
      current = result.forward_converges ? next_generation(current) : prev_generation(current);
    } catch (const Error&) {
      break;
    }
    result.limit_steps = step;
    if (euclid::diameter(current.points) <= 1e-6 * scale) {
      result.limit_distance = (Vector<double>(current.points.rowwise().mean()) - result.point).norm() / scale;
      break;
    }
  }
  return result;
}

}  // namespace pbc

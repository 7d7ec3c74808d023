#pragma once

// Least-squares verifiers for the structural properties of the construction:
// perspectivity of generations k and k+2, homothety of same-parity
// generations, and the isoptic point.

#include "pbc/configuration.hpp"

#include <utility>
#include <vector>

namespace pbc {

enum class CenterKind { Ordinary, Ideal, Hyperideal };

std::string_view to_string(CenterKind k);

struct PerspectivityResult {
  CenterKind kind{CenterKind::Ordinary};
  // Ordinary: the fitted point. Ideal (Euclidean): unit direction of the
  // parallel lines. Ideal/hyperideal (hyperbolic): Euclidean-unit ambient
  // vector of the projective center.
  Vector<double> center;
  double max_line_residual{0};
  double scale{0};
  std::vector<std::pair<Vector<double>, Vector<double>>> lines;

  bool ok(double tolerance = tol::kVerify) const { return max_line_residual <= tolerance * scale; }
};

/// Fits the common point of the lines (geodesics) through corresponding
/// points a_i and b_i. Euclidean: minimizes the sum of squared point-line
/// distances, returning an ideal direction when all lines are parallel.
/// Spherical/hyperbolic: minimizes the ambient analogue (distance of the
/// candidate to each geodesic's plane) and reports geodesic residuals.
/// Throws LinesDegenerate when some a_i coincides with b_i.
PerspectivityResult perspectivity(const Configuration& a, const Configuration& b);

struct HomothetyResult {
  Vector<double> center;
  double ratio{0};
  double max_residual{0};
  double scale{0};
};

/// Fits b_i = center + ratio (a_i - center) by least squares over the index
/// correspondence. Euclidean only. Throws NotHomothetic when the residual
/// exceeds tolerance * scale or the best fit is a pure translation.
HomothetyResult homothety(const Configuration& a, const Configuration& b,
                          double tolerance = tol::kVerify);

struct IsopticResult {
  Vector<double> point;  // homothety center of N^(1), N^(3)
  Vector<double> even_point;  // homothety center of N^(2), N^(4)
  double agreement{0};  // |point - even_point| / diameter(N^(1))
  double odd_ratio{0};
  double even_ratio{0};
  // |P^(1)| / |P^(3)| = |odd_ratio|^(-d); > 1 means the forward construction
  // converges to the point.
  double volume_ratio{0};
  bool forward_converges{false};
  // Distance from the centroid of the last generation reached by running the
  // converging construction to `point`, relative to diameter(N^(1)); NaN when
  // that run fails before shrinking.
  double limit_distance{0};
  int limit_steps{0};

  bool consistent(double tolerance = tol::kVerify) const { return agreement <= tolerance; }
};

/// The universal homothety center W of a Euclidean configuration, computed
/// from the odd pair (N^(1), N^(3)) and cross-checked against the even pair.
IsopticResult isoptic_point(const Configuration& c, double tolerance = tol::kVerify);

}  // namespace pbc

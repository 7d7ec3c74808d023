#pragma once

// Angle decomposition of a planar quadrilateral and the cotangent
// expressions for the area ratio of consecutive generations.

#include "pbc/configuration.hpp"

#include <array>

namespace pbc {

/// Interior angles of the quadrilateral V1 V2 V3 V4 (alpha at V1, beta at V2,
/// ...) and their split by the diagonals. At each vertex, the diagonal to the
/// opposite vertex splits the angle into a part against the incoming side
/// (index 1) and a part against the outgoing side (index 2), with the
/// quadrilateral traversed counter-clockwise. For a reflex vertex the
/// diagonal runs outside and one part is negative; every part is then only
/// meaningful modulo pi, which is all the cotangents need.
struct QuadAngles {
  double alpha{0}, beta{0}, gamma{0}, delta{0};
  double alpha1{0}, alpha2{0};
  double beta1{0}, beta2{0};
  double gamma1{0}, gamma2{0};
  double delta1{0}, delta2{0};
};

/// Throws CrossingQuadrilateral for a self-intersecting vertex order.
QuadAngles quad_angles(const Configuration& c);

/// The three cotangent expressions for |P^(k+1)| / |P^(k)|:
///   1/4 (cot alpha + cot gamma)(cot beta + cot delta)
///   1/4 (cot alpha1 - cot beta2)(cot delta2 - cot gamma1)
///   1/4 (cot delta1 - cot alpha2)(cot gamma2 - cot beta1)
/// Signed: they equal the signed shoelace ratio of consecutive generations.
/// Throws CotangentPole when an angle is a multiple of pi.
std::array<double, 3> ratio_formulas(const QuadAngles& q);

/// Signed area(N^(2)) / signed area(N^(1)) from the actual construction.
double constructed_area_ratio(const Configuration& c);

}  // namespace pbc

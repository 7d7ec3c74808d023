#pragma once

// SVG 1.1 drawings of configurations: the Euclidean plane, the Poincare disk,
// an orthographic view of the sphere, and an orthographic view of R^3.

#include "pbc/configuration.hpp"

#include <array>
#include <string>
#include <vector>

namespace pbc::svg {

struct RenderOptions {
  int width = 200;
  int height = 200;
  double margin = 0.05;
  // Draw the lines V_i^(k) V_i^(k+2) through the fitted perspectivity center
  // for every pair of drawn configurations two generations apart.
  bool perspectivity_lines = false;
};

inline constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

/// Color of a generation; cycles through the palette.
const char* generation_color(int generation);

/// Circle carrying the hyperbolic geodesic through disk points u and v; it is
/// orthogonal to the unit circle (|center|^2 = radius^2 + 1). `straight` is
/// set when u, v and the origin are collinear and the geodesic is a diameter.
struct GeodesicArc {
  Eigen::Vector2d center{0, 0};
  double radius{0};
  bool straight{false};
};

GeodesicArc geodesic_arc(const Eigen::Vector2d& u, const Eigen::Vector2d& v);

/// Deterministic SVG text. Throws UnsupportedDimension unless every
/// configuration is planar (any geometry) or Euclidean with d = 3.
std::string render_svg(const std::vector<Configuration>& configs, const RenderOptions& options = {});

}  // namespace pbc::svg

#pragma once

// The iterative perpendicular bisector construction and its reversal by
// isogonal conjugation, in Euclidean, spherical and hyperbolic geometry.

#include "pbc/configuration.hpp"
#include "pbc/euclid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbc {

/// Center of the hypersphere through the n-1 columns of `points`. Throws
/// Degenerate for an ideal Euclidean center or a rank-deficient
/// non-Euclidean system, HyperbolicCenterNotOrdinary for ideal or
/// hyperideal hyperbolic centers.
Vector<double> circumcenter_in(Geometry g, const PointSet<double>& points);

/// Relative deviation of all n points from one hypersphere (0 when
/// conhyperspherical). Infinite when no ordinary common center can exist.
double conhyperspherical_deviation(const Configuration& c);

bool is_conhyperspherical(const Configuration& c, double tolerance = tol::kVerify);

struct CenterFailure {
  int omitted{0};
  noneuclid::CenterClass<double>::Kind kind{noneuclid::CenterClass<double>::Kind::Ideal};
};

struct DegeneracyReport {
  bool conhyperspherical{false};
  double deviation{0};
  // Each entry is a sorted list of n-1 point indices that are affinely
  // dependent (rank-deficient equidistance system off the flat).
  std::vector<std::vector<int>> dependent_subsets;
  std::vector<CenterFailure> center_class_failures;

  bool clear() const {
    return !conhyperspherical && dependent_subsets.empty() && center_class_failures.empty();
  }
};

DegeneracyReport degeneracy_report(const Configuration& c, double tolerance = tol::kVerify);

/// N^(k+1): output point i is the center of the hypersphere through the n-1
/// input points other than V_i.
Configuration next_generation(const Configuration& c);

/// Isogonal conjugate of p in the simplex whose d+1 vertices are the columns
/// of `simplex`: the circumcenter of the reflections of p in the facets.
Vector<double> isogonal_conjugate(Geometry g, const PointSet<double>& simplex,
                                  const Vector<double>& p);

/// N^(k-1): output point i is the isogonal conjugate of V_i in the simplex of
/// the other n-1 points. Inverts next_generation.
Configuration prev_generation(const Configuration& c);

enum class Direction { Forward, Reverse };

enum class IterationStatus { Completed, Collapsed, Degenerate, NotOrdinary, ConjugateAtInfinity, Failed };

std::string_view to_string(IterationStatus s);

struct IterationResult {
  std::vector<Configuration> generations;
  IterationStatus status{IterationStatus::Completed};
  std::optional<int> failed_step;
  std::string message;

  bool completed() const { return status == IterationStatus::Completed; }
};

/// Runs `steps` construction steps. Stops at the first failing step and keeps
/// the generations computed so far.
IterationResult iterate(const Configuration& c, int steps, Direction direction = Direction::Forward);

/// |P| of a Euclidean configuration: shoelace area of the cyclic order for
/// d = 2, convex-hull volume for d = 3.
euclid::PolytopeVolume<double> polytope_volume(const Configuration& c);

}  // namespace pbc

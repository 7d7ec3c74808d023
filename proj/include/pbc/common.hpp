#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbc {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Point sets are stored column-wise: one point per column.
template <typename Scalar>
using PointSet = Matrix<Scalar>;

enum class ErrorCode {
  CoincidentPoints,
  DuplicatePoints,
  AntipodalPoints,
  DegenerateInput,
  NotInConvexPosition,
  ModelMismatch,
  OutsideDisk,
  InvalidPolarity,
  Conhyperspherical,
  Degenerate,
  HyperbolicCenterNotOrdinary,
  ConjugateAtInfinity,
  LinesDegenerate,
  NotHomothetic,
  CrossingQuadrilateral,
  CotangentPole,
  UnsupportedDimension,
  ParseError,
  ValidationError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::AntipodalPoints: return "AntipodalPoints";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotInConvexPosition: return "NotInConvexPosition";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::InvalidPolarity: return "InvalidPolarity";
    case ErrorCode::Conhyperspherical: return "Conhyperspherical";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::HyperbolicCenterNotOrdinary: return "HyperbolicCenterNotOrdinary";
    case ErrorCode::ConjugateAtInfinity: return "ConjugateAtInfinity";
    case ErrorCode::LinesDegenerate: return "LinesDegenerate";
    case ErrorCode::NotHomothetic: return "NotHomothetic";
    case ErrorCode::CrossingQuadrilateral: return "CrossingQuadrilateral";
    case ErrorCode::CotangentPole: return "CotangentPole";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Default thresholds. Every predicate that takes a tolerance defaults to one
/// of these; all of them are relative to a configuration scale.
namespace tol {
// |cofactor| <= kDegeneracy * diameter^d declares affine dependence.
inline constexpr double kDegeneracy = 1e-10;
// singular value <= kRank * largest singular value counts as zero.
inline constexpr double kRank = 1e-9;
// |<c,c>| <= kIdeal * |c|^2 declares a hyperbolic center ideal.
inline constexpr double kIdeal = 1e-8;
// diameter(next) <= kCollapse * diameter(current) is a point collapse.
inline constexpr double kCollapse = 1e-9;
// default verification / conhypersphericity tolerance.
inline constexpr double kVerify = 1e-8;
// coincident-point threshold relative to the configuration scale.
inline constexpr double kCoincident = 1e-12;
}  // namespace tol

}  // namespace pbc

#pragma once

// Line-based scene files:
//
//   # comment
//   geometry euclidean|spherical|hyperbolic
//   dim <d>
//   label <text>            (optional)
//   seed <u64>              (optional)
//   generation <int>        (optional, default 1)
//   point <floats>          (d + 2 lines)
//
// Euclidean points carry d coordinates, spherical points d + 1 (a unit
// vector), hyperbolic points d Poincare-ball coordinates.

#include "pbc/configuration.hpp"

#include <string>
#include <string_view>

namespace pbc {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Throws ParseError for malformed text and ValidationError for a
/// well-formed scene that is not a valid configuration.
Configuration parse_scene(std::string_view text);

/// Canonical text form; coordinates use 17 significant digits.
std::string format_scene(const Configuration& c);

Configuration load_scene(const std::string& path);
void save_scene(const std::string& path, const Configuration& c);

}  // namespace pbc

#include "pbc/scene.hpp"

#include "pbc/noneuclid.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace pbc {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

template <typename T>
T parse_number(const Token& tok, int line, const char* what) {
  T value{};
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (!tok.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, tok.column, std::string("expected ") + what + ", got '" +
                                           std::string(tok.text) + "'");
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(value)) throw ParseError(line, tok.column, "non-finite coordinate");
  return value;
}

std::string rest_of_line(std::string_view line, const Token& first_arg) {
  std::string_view rest = line.substr(static_cast<std::size_t>(first_arg.column - 1));
  if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r'))
    rest.remove_suffix(1);
  return std::string(rest);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Configuration parse_scene(std::string_view text) {
  std::optional<Geometry> geometry;
  std::optional<int> dim;
  Configuration c;
  std::vector<std::vector<double>> rows;
  std::vector<int> row_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0].text;
    auto require_args = [&](std::size_t count) {
      if (tokens.size() - 1 != count)
        throw ParseError(line_no, tokens[0].column,
                         "'" + std::string(key) + "' takes " + std::to_string(count) + " argument(s)");
    };

    if (key == "geometry") {
      require_args(1);
      if (geometry) throw ParseError(line_no, tokens[0].column, "duplicate geometry");
      geometry = parse_geometry(tokens[1].text);
      if (!geometry)
        throw ParseError(line_no, tokens[1].column,
                         "unknown geometry '" + std::string(tokens[1].text) + "'");
    } else if (key == "dim") {
      require_args(1);
      if (dim) throw ParseError(line_no, tokens[0].column, "duplicate dim");
      dim = parse_number<int>(tokens[1], line_no, "an integer");
    } else if (key == "point") {
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "point without coordinates");
      std::vector<double> row;
      for (std::size_t k = 1; k < tokens.size(); ++k)
        row.push_back(parse_number<double>(tokens[k], line_no, "a number"));
      rows.push_back(std::move(row));
      row_lines.push_back(line_no);
    } else if (key == "label") {
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "empty label");
      c.label = rest_of_line(line, tokens[1]);
    } else if (key == "seed") {
      require_args(1);
      c.seed = parse_number<std::uint64_t>(tokens[1], line_no, "an unsigned integer");
    } else if (key == "generation") {
      require_args(1);
      c.generation = parse_number<int>(tokens[1], line_no, "an integer");
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!geometry) throw ParseError(line_no, 1, "missing 'geometry'");
  if (!dim) throw ParseError(line_no, 1, "missing 'dim'");
  if (*dim < 2) throw Error(ErrorCode::ValidationError, "dim must be at least 2");
  c.geometry = *geometry;
  c.dim = *dim;
  if (static_cast<int>(rows.size()) != *dim + 2)
    throw Error(ErrorCode::ValidationError, "expected " + std::to_string(*dim + 2) +
                                                " points for dim " + std::to_string(*dim) + ", got " +
                                                std::to_string(rows.size()));

  const int given = c.geometry == Geometry::Spherical ? *dim + 1 : *dim;
  c.points.resize(c.ambient(), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != given)
      throw Error(ErrorCode::ValidationError, "line " + std::to_string(row_lines[i]) + ": expected " +
                                                  std::to_string(given) + " coordinates, got " +
                                                  std::to_string(rows[i].size()));
    const Vector<double> raw = Eigen::Map<const Vector<double>>(rows[i].data(), given);
    switch (c.geometry) {
      case Geometry::Euclidean:
        c.points.col(i) = raw;
        break;
      case Geometry::Spherical: {
        const double len = raw.norm();
        if (std::abs(len - 1.0) > 1e-6)
          throw Error(ErrorCode::ValidationError,
                      "line " + std::to_string(row_lines[i]) + ": not a unit vector");
        // leave vectors that are unit to rounding untouched so text round-trips
        c.points.col(i) = std::abs(len - 1.0) > 4e-16 ? Vector<double>(raw / len) : raw;
        break;
      }
      case Geometry::Hyperbolic:
        if (!(raw.squaredNorm() < 1.0))
          throw Error(ErrorCode::ValidationError,
                      "line " + std::to_string(row_lines[i]) + ": point is not inside the unit disk");
        c.points.col(i) = noneuclid::from_poincare(raw);
        break;
    }
  }
  validate(c);
  return c;
}

std::string format_scene(const Configuration& c) {
  std::ostringstream out;
  out << "geometry " << to_string(c.geometry) << "\n";
  out << "dim " << c.dim << "\n";
  if (!c.label.empty()) out << "label " << c.label << "\n";
  if (c.seed) out << "seed " << *c.seed << "\n";
  out << "generation " << c.generation << "\n";
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const Vector<double> coords = c.geometry == Geometry::Hyperbolic
                                      ? noneuclid::to_poincare(c.points.col(i))
                                      : Vector<double>(c.points.col(i));
    out << "point";
    for (Eigen::Index k = 0; k < coords.size(); ++k) out << ' ' << format_double(coords(k));
    out << "\n";
  }
  return out.str();
}

Configuration load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scene(buffer.str());
}

void save_scene(const std::string& path, const Configuration& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + path + "'");
  out << format_scene(c);
}

}  // namespace pbc

#include "pbc/construction.hpp"
#include "pbc/scene.hpp"
#include "pbc/svg.hpp"
#include "support.hpp"

#include <doctest.h>

#include <regex>

using namespace pbc;
using pbc::test::euclidean_config;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("square renders as one closed polygon in a 200 by 200 box") {
  const std::string svg = svg::render_svg({euclidean_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}})});
  CHECK(svg.find("viewBox=\"0 0 200 200\"") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(count(svg, "class=\"vertex\"") == 4);
  // 5% margin on each side: the square spans 10 .. 190
  CHECK(svg.find("10.000,190.000 190.000,190.000 190.000,10.000 10.000,10.000") != std::string::npos);
}

TEST_CASE("generations get palette colors and optional perspectivity lines") {
  const auto q = euclidean_config({{0, 0}, {4, 0}, {0, 3}, {5, 5}});
  const auto run = iterate(q, 2);
  REQUIRE(run.completed());
  svg::RenderOptions opts;
  const std::string plain = svg::render_svg(run.generations, opts);
  CHECK(count(plain, "<polygon") == 3);
  CHECK(count(plain, "class=\"perspectivity\"") == 0);
  for (int g = 1; g <= 3; ++g) CHECK(plain.find(svg::generation_color(g)) != std::string::npos);
  CHECK(std::string(svg::generation_color(1)) == svg::generation_color(9));

  opts.perspectivity_lines = true;
  const std::string lines = svg::render_svg(run.generations, opts);
  CHECK(count(lines, "class=\"perspectivity\"") == 4);
  CHECK(count(lines, "class=\"center\"") == 1);
  CHECK(lines == svg::render_svg(run.generations, opts));
}

TEST_CASE("hyperbolic rendering draws arcs orthogonal to the unit circle") {
  const auto c = parse_scene("geometry hyperbolic\ndim 2\npoint 0.1 0.05\npoint 0.5 0\npoint 0.2 0.5\npoint -0.4 -0.3\n");
  const std::string svg = svg::render_svg({c});
  CHECK(count(svg, "class=\"boundary\"") == 1);
  CHECK(count(svg, " A ") == 4);

  // every vertex lies strictly inside the boundary circle
  const std::regex vertex(R"re(class="vertex" cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), vertex); it != std::sregex_iterator(); ++it) {
    const double x = std::stod((*it)[1]) - 100, y = std::stod((*it)[2]) - 100;
    CHECK(std::hypot(x, y) < 90);
  }

  auto rng = sampling::trial_rng(81, 0);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Vector2d a(u(rng), u(rng)), b(u(rng), u(rng));
    const auto arc = svg::geodesic_arc(a, b);
    REQUIRE_FALSE(arc.straight);
    CHECK(arc.center.squaredNorm() == doctest::Approx(arc.radius * arc.radius + 1).epsilon(1e-12));
    CHECK((a - arc.center).norm() == doctest::Approx(arc.radius).epsilon(1e-12));
    CHECK((b - arc.center).norm() == doctest::Approx(arc.radius).epsilon(1e-12));
  }
  CHECK(svg::geodesic_arc(Eigen::Vector2d(0.2, 0.2), Eigen::Vector2d(-0.4, -0.4)).straight);
}

TEST_CASE("spherical and three-dimensional rendering") {
  auto rng = sampling::trial_rng(82, 0);
  const std::string sphere = svg::render_svg({sampling::spherical(rng, 2)});
  CHECK(count(sphere, "class=\"boundary\"") == 1);
  CHECK(count(sphere, "<path") == 4);

  const std::string solid = svg::render_svg({sampling::euclidean(rng, 3)});
  CHECK(count(solid, "<path") == 10);

  try {
    svg::render_svg({sampling::spherical(rng, 3)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
}

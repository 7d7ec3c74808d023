#include "pbc/noneuclid.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace pbc;
using namespace pbc::noneuclid;
using pbc::test::columns;

namespace {

Vector<double> random_sphere_point(sampling::Rng& rng, int n) { return sampling::unit_vector(rng, n); }

Vector<double> random_hyperboloid_point(sampling::Rng& rng, int d, double radius = 0.8) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Vector<double> x(d);
  do {
    for (int k = 0; k < d; ++k) x(k) = u(rng);
  } while (x.norm() >= radius);
  return from_poincare(x);
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(distance(Model::Spherical, Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)) ==
        doctest::Approx(std::numbers::pi / 2));
  const Eigen::Vector3d o(0, 0, 1);
  CHECK(distance(Model::Hyperbolic, o, o) == 0);
  CHECK(distance(Model::Hyperbolic, o, Eigen::Vector3d(std::sinh(1.0), 0, std::cosh(1.0))) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("distance rejects mismatched dimensions") {
  try {
    distance(Model::Spherical, Vector<double>(Eigen::Vector3d(1, 0, 0)), Vector<double>(Eigen::Vector4d(1, 0, 0, 0)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelMismatch);
  }
}

TEST_CASE("distances agree with the arc and disk formulas") {
  auto rng = sampling::trial_rng(21, 0);
  for (int t = 0; t < 200; ++t) {
    const Vector<double> p = random_sphere_point(rng, 3), q = random_sphere_point(rng, 3);
    CHECK(distance(Model::Spherical, p, q) == doctest::Approx(test::sphere_distance(p, q)).epsilon(1e-12));
    const Vector<double> a = random_hyperboloid_point(rng, 2), b = random_hyperboloid_point(rng, 2);
    CHECK(distance(Model::Hyperbolic, a, b) ==
          doctest::Approx(test::disk_distance(to_poincare(a), to_poincare(b))).epsilon(1e-10));
  }
}

TEST_CASE("mediator examples") {
  const auto s = mediator_ne(Model::Spherical, Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0));
  CHECK(std::abs(s.normal.dot(Eigen::Vector3d(1, -1, 0).normalized())) == doctest::Approx(1));

  const double t = 0.7;
  const auto h = mediator_ne(Model::Hyperbolic, Eigen::Vector3d(std::sinh(t), 0, std::cosh(t)),
                             Eigen::Vector3d(-std::sinh(t), 0, std::cosh(t)));
  CHECK(std::abs(h.normal(0)) == doctest::Approx(1));
  CHECK(h.normal.tail(2).norm() <= 1e-12);
}

TEST_CASE("mediator separates its endpoints and is the equidistant locus") {
  auto rng = sampling::trial_rng(22, 0);
  for (const Model model : {Model::Spherical, Model::Hyperbolic}) {
    for (int t = 0; t < 100; ++t) {
      const int d = 2 + t % 2;
      const Vector<double> p = model == Model::Spherical ? random_sphere_point(rng, d + 1)
                                                         : random_hyperboloid_point(rng, d);
      const Vector<double> q = model == Model::Spherical ? random_sphere_point(rng, d + 1)
                                                         : random_hyperboloid_point(rng, d);
      const auto h = mediator_ne(model, p, q);
      CHECK(h.evaluate(p) * h.evaluate(q) < 0);
      CHECK(form(model, h.normal, h.normal) == doctest::Approx(1.0));

      // a point of the model on the mediator: project a model point onto it
      const Vector<double> seed = model == Model::Spherical ? random_sphere_point(rng, d + 1)
                                                            : random_hyperboloid_point(rng, d, 0.3);
      Vector<double> x = seed - form(model, h.normal, seed) * h.normal;
      const double q2 = form(model, x, x);
      if (model == Model::Spherical ? q2 < 1e-6 : q2 > -1e-6) continue;
      x /= std::sqrt(std::abs(q2));
      if (model == Model::Hyperbolic && x(d) < 0) x = -x;
      CHECK(std::abs(distance(model, x, p) - distance(model, x, q)) <= 1e-9);
    }
  }
}

TEST_CASE("mediator of coincident or antipodal points is an error") {
  const Eigen::Vector3d e(1, 0, 0);
  CHECK_THROWS_AS(mediator_ne(Model::Spherical, e, e), Error);
  try {
    mediator_ne(Model::Spherical, e, Eigen::Vector3d(-1, 0, 0));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::AntipodalPoints);
  }
}

TEST_CASE("reflection examples") {
  GeodesicHyperplane<double> h{Model::Spherical, Vector<double>(Eigen::Vector3d(1, 0, 0))};
  CHECK(reflect_ne(Model::Spherical, Eigen::Vector3d(0, 1, 0), h).isApprox(Eigen::Vector3d(0, 1, 0)));
  CHECK(reflect_ne(Model::Spherical, Eigen::Vector3d(1, 0, 0), h).isApprox(Eigen::Vector3d(-1, 0, 0)));
}

TEST_CASE("reflections are involutive isometries that stay in the model") {
  auto rng = sampling::trial_rng(23, 0);
  for (const Model model : {Model::Spherical, Model::Hyperbolic}) {
    for (int t = 0; t < 200; ++t) {
      const int d = 2 + t % 2;
      auto draw = [&] {
        return model == Model::Spherical ? random_sphere_point(rng, d + 1) : random_hyperboloid_point(rng, d);
      };
      const Vector<double> x = draw(), y = draw();
      const auto h = mediator_ne(model, draw(), draw());
      const Vector<double> rx = reflect_ne(model, x, h), ry = reflect_ne(model, y, h);
      CHECK((reflect_ne(model, rx, h) - x).norm() <= 1e-12 * std::max(1.0, x.norm() * x.norm()));
      CHECK(distance(model, rx, ry) == doctest::Approx(distance(model, x, y)).epsilon(1e-10));
      if (model == Model::Spherical)
        CHECK(std::abs(rx.norm() - 1) <= 1e-10);
      else
        CHECK(std::abs(form(model, rx, rx) + 1) <= 1e-9 * rx.squaredNorm());
    }
  }
}

TEST_CASE("reflection rejects a hyperplane of another model") {
  GeodesicHyperplane<double> h{Model::Spherical, Vector<double>(Eigen::Vector3d(1, 0, 0))};
  try {
    reflect_ne(Model::Hyperbolic, Eigen::Vector3d(0, 0, 1), h);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModelMismatch);
  }
}

TEST_CASE("spherical circumcenter examples") {
  const double r = 1 / std::sqrt(2.0);
  const auto eq = circumcenter_ne(Model::Spherical, columns({{1, 0, 0}, {0, 1, 0}, {-r, -r, 0}}));
  REQUIRE(eq.is_ordinary());
  CHECK(eq.point.isApprox(Eigen::Vector3d(0, 0, 1)));

  const auto oct = circumcenter_ne(Model::Spherical, columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(oct.point.isApprox(Eigen::Vector3d(1, 1, 1).normalized()));
}

TEST_CASE("hyperbolic circumcenter of points equidistant from the origin") {
  const double r = 0.9;
  PointSet<double> pts(3, 3);
  for (int k = 0; k < 3; ++k) {
    const double a = 0.4 + 2.1 * k;
    pts.col(k) = Eigen::Vector3d(std::sinh(r) * std::cos(a), std::sinh(r) * std::sin(a), std::cosh(r));
  }
  const auto c = circumcenter_ne(Model::Hyperbolic, pts);
  REQUIRE(c.is_ordinary());
  CHECK((c.point - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-12);
  CHECK(c.radius == doctest::Approx(r));
}

TEST_CASE("non-Euclidean circumcenters are equidistant") {
  auto rng = sampling::trial_rng(24, 0);
  int hyperbolic_ordinary = 0;
  for (const Model model : {Model::Spherical, Model::Hyperbolic}) {
    for (int t = 0; t < 200; ++t) {
      const int d = 2 + t % 2;
      PointSet<double> pts(d + 1, d + 1);
      for (int i = 0; i <= d; ++i)
        pts.col(i) = model == Model::Spherical ? random_sphere_point(rng, d + 1) : random_hyperboloid_point(rng, d, 0.5);
      if (model == Model::Spherical && !in_open_hemisphere(pts)) continue;
      const auto c = circumcenter_ne(model, pts);
      if (!c.is_ordinary()) continue;
      if (model == Model::Hyperbolic) ++hyperbolic_ordinary;
      const double d0 = distance(model, c.point, pts.col(0));
      for (int i = 1; i <= d; ++i) CHECK(std::abs(distance(model, c.point, pts.col(i)) - d0) <= 1e-9);
    }
  }
  CHECK(hyperbolic_ordinary > 50);
}

TEST_CASE("hyperbolic center classification") {
  // three points near a horocycle and far apart have an ideal or hyperideal center
  PointSet<double> far(2, 3);
  far << 0.95, -0.95, 0.0, 0.0, 0.0, 0.0;
  far(1, 2) = 0.001;
  Configuration c = test::hyperbolic_from_disk(far);
  const auto center = circumcenter_ne(Model::Hyperbolic, c.points);
  CHECK_FALSE(center.is_ordinary());
  CHECK(center.kind == CenterClass<double>::Kind::Hyperideal);
}

TEST_CASE("hyperbolic classification is invariant under isometries") {
  auto rng = sampling::trial_rng(25, 0);
  for (int t = 0; t < 100; ++t) {
    PointSet<double> pts(3, 3);
    for (int i = 0; i < 3; ++i) pts.col(i) = random_hyperboloid_point(rng, 2, 0.9);
    const Matrix<double> motion = test::boost(sampling::unit_vector(rng, 2), 0.8);
    const auto a = circumcenter_ne(Model::Hyperbolic, pts);
    const auto b = circumcenter_ne(Model::Hyperbolic, Matrix<double>(motion * pts));
    CHECK(a.kind == b.kind);
    if (a.is_ordinary() && b.is_ordinary()) CHECK((motion * a.point - b.point).norm() <= 1e-8 * b.point.norm());
  }
}

TEST_CASE("perpendicularity") {
  GeodesicHyperplane<double> a{Model::Spherical, Vector<double>(Eigen::Vector3d(1, 0, 0))};
  GeodesicHyperplane<double> b{Model::Spherical, Vector<double>(Eigen::Vector3d(0, 1, 0))};
  CHECK(perpendicular_check(a, b));
  CHECK_FALSE(perpendicular_check(a, a));

  auto rng = sampling::trial_rng(26, 0);
  for (const Model model : {Model::Spherical, Model::Hyperbolic}) {
    for (int t = 0; t < 50; ++t) {
      PointSet<double> pq(3, 2);
      for (int i = 0; i < 2; ++i)
        pq.col(i) = model == Model::Spherical ? random_sphere_point(rng, 3) : random_hyperboloid_point(rng, 2);
      const auto med = mediator_ne(model, pq.col(0), pq.col(1));
      const auto line = hyperplane_through(model, pq);
      CHECK(perpendicular_check(med, line));
    }
  }
}

TEST_CASE("Poincare conversions") {
  CHECK(to_poincare(Eigen::Vector3d(0, 0, 1)).norm() == 0);
  const double t = 1.3;
  CHECK(to_poincare(Eigen::Vector3d(std::sinh(t), 0, std::cosh(t))).isApprox(Eigen::Vector2d(std::tanh(t / 2), 0)));
  auto rng = sampling::trial_rng(27, 0);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector2d x(u(rng), u(rng));
    const Vector<double> lifted = from_poincare(x);
    CHECK(std::abs(form(Model::Hyperbolic, lifted, lifted) + 1) <= 1e-12 * lifted.squaredNorm());
    CHECK((to_poincare(lifted) - x).norm() <= 1e-12);
  }
  CHECK_THROWS_AS(from_poincare(Eigen::Vector2d(1, 0)), Error);
}

TEST_CASE("open hemisphere test") {
  CHECK(in_open_hemisphere(columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(in_open_hemisphere(columns({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}})));
  CHECK_FALSE(in_open_hemisphere(columns({{1, 0, 0}, {-0.5, 0.866025403784438, 0}, {-0.5, -0.866025403784438, 0}})));
}

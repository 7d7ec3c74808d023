#include "pbc/projective.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pbc;
using namespace pbc::projective;

namespace {

const Polarity<double> kCircle(Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix());

Vector<double> v3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

Vector<double> random_vector(sampling::Rng& rng, int n) {
  std::normal_distribution<double> g;
  Vector<double> v(n);
  for (int k = 0; k < n; ++k) v(k) = g(rng);
  return v;
}

Matrix<double> random_symmetric(sampling::Rng& rng, int n) {
  std::normal_distribution<double> g;
  Matrix<double> m(n, n);
  for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = g(rng);
  return m + m.transpose();
}

}  // namespace

TEST_CASE("polar examples for the unit circle") {
  CHECK(same_point(polar(v3(2, 0, 1), kCircle), v3(2, 0, -1), 1e-12));
  CHECK(same_point(polar(v3(1, 0, 1), kCircle), v3(1, 0, -1), 1e-12));
  CHECK(same_point(polar(v3(0, 0, 1), kCircle), v3(0, 0, -1), 1e-12));
}

TEST_CASE("pole examples for the unit circle") {
  CHECK(same_point(pole(v3(2, 0, -1), kCircle), v3(2, 0, 1), 1e-12));
  CHECK(same_point(pole(v3(0, 0, 1), kCircle), v3(0, 0, -1), 1e-12));
  CHECK(same_point(pole(v3(1, 0, -1), kCircle), v3(1, 0, 1), 1e-12));
}

TEST_CASE("conjugate point examples") {
  CHECK(conjugate_points(v3(2, 0, 1), v3(0.5, 3, 1), kCircle));
  CHECK(conjugate_points(v3(1, 0, 1), v3(1, 0, 1), kCircle));
  CHECK_FALSE(conjugate_points(v3(1, 0, 0), v3(1, 0, 0), kCircle));
}

TEST_CASE("polarity rejects bad matrices") {
  Matrix<double> skew(2, 2);
  skew << 1, 2, 0, 1;
  CHECK_THROWS_AS(Polarity<double>{skew}, Error);
  CHECK_THROWS_AS(Polarity<double>{Matrix<double>::Zero(3, 3)}, Error);
  CHECK_THROWS_AS(Polarity<double>{Matrix<double>::Ones(2, 3)}, Error);
}

TEST_CASE("pole and polar are mutually inverse") {
  auto rng = sampling::trial_rng(31, 0);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 3;
    const Polarity<double> g(random_symmetric(rng, n));
    const Vector<double> p = random_vector(rng, n), h = random_vector(rng, n);
    CHECK(same_point(pole(polar(p, g), g), p, 1e-10));
    CHECK(same_point(polar(pole(h, g), g), h, 1e-10));
  }
}

TEST_CASE("conjugacy is symmetric") {
  auto rng = sampling::trial_rng(32, 0);
  for (int t = 0; t < 200; ++t) {
    const Polarity<double> g(random_symmetric(rng, 3));
    const Vector<double> p = random_vector(rng, 3);
    Vector<double> q = random_vector(rng, 3);
    CHECK(conjugate_points(p, q, g) == conjugate_points(q, p, g));
    // force q onto the polar of p; then p lies on the polar of q
    const Vector<double> h = polar(p, g);
    q -= h.dot(q) / h.squaredNorm() * h;
    CHECK(conjugate_points(p, q, g));
    CHECK(std::abs(polar(q, g).dot(p)) <= 1e-10 * p.norm() * q.norm() * g.matrix().norm());
  }
}

TEST_CASE("points on a common hyperplane") {
  std::vector<Flat<double>> at_infinity = {{Matrix<double>(v3(1, 0, 0))},
                                           {Matrix<double>(v3(0, 1, 0))},
                                           {Matrix<double>(v3(1, 1, 0))}};
  const auto line = flats_on_common_hyperplane(at_infinity);
  REQUIRE(line);
  CHECK(same_point(*line, v3(0, 0, 1), 1e-12));

  std::vector<Flat<double>> generic = {{Matrix<double>(v3(1, 0, 1))},
                                       {Matrix<double>(v3(0, 1, 1))},
                                       {Matrix<double>(v3(1, 1, 1))}};
  CHECK_FALSE(flats_on_common_hyperplane(generic));
}

TEST_CASE("two lines in a plane of projective 3-space") {
  Matrix<double> a(4, 2), b(4, 2);
  a << 1, 0, 2, 1, 0, 3, 0, 0;
  b << 0, 5, 1, 1, 1, -2, 0, 0;
  const auto plane = flats_on_common_hyperplane<double>({{a}, {b}});
  REQUIRE(plane);
  CHECK(same_point(*plane, Eigen::Vector4d(0, 0, 0, 1), 1e-12));
  b(3, 1) = 1;
  CHECK_FALSE(flats_on_common_hyperplane<double>({{a}, {b}}));
}

TEST_CASE("concurrent lines") {
  const Vector<double> p = v3(1, 1, 1);
  const auto meet_point =
      lines_concurrent<double>({join(p, v3(1, 0, 0)), join(p, v3(0, 2, 1)), join(p, v3(-3, 1, 4))});
  REQUIRE(meet_point);
  CHECK(same_point(*meet_point, p, 1e-12));

  const Vector<double> a = v3(0, 0, 1), b = v3(1, 0, 1), c = v3(0, 1, 1);
  CHECK_FALSE(lines_concurrent<double>({join(a, b), join(b, c), join(c, a)}));
}

TEST_CASE("collinear intersection points have concurrent polar lines on the sphere") {
  // In RP^2 with the identity polarity, intersect m pairs of lines; the
  // intersection points lie on one line iff their polar lines meet.
  const Polarity<double> sphere(Matrix<double>::Identity(3, 3));
  auto rng = sampling::trial_rng(33, 0);
  auto polars_of = [&](const std::vector<Vector<double>>& pts) {
    std::vector<Flat<double>> lines;
    for (const auto& h : pts) lines.push_back(flat_of_hyperplane(polar(h, sphere)));
    return lines;
  };
  auto intersection = [&](const Vector<double>& h1, const Vector<double>& h2) {
    Matrix<double> planes(3, 2);
    planes << h1, h2;
    return Vector<double>(meet(planes).span.col(0));
  };

  for (int t = 0; t < 100; ++t) {
    // positive: choose the intersection points on a random line, then two
    // random lines through each
    const Vector<double> ell = random_vector(rng, 3);
    std::vector<Vector<double>> on_line, generic;
    for (int i = 0; i < 3; ++i) {
      Vector<double> x = random_vector(rng, 3);
      x -= ell.dot(x) / ell.squaredNorm() * ell;
      const Eigen::Vector3d x3 = x;
      const Vector<double> h1 = x3.cross(Eigen::Vector3d(random_vector(rng, 3)));
      const Vector<double> h2 = x3.cross(Eigen::Vector3d(random_vector(rng, 3)));
      on_line.push_back(intersection(h1, h2));
      generic.push_back(intersection(random_vector(rng, 3), random_vector(rng, 3)));
    }
    std::vector<Flat<double>> pos_flats, neg_flats;
    for (int i = 0; i < 3; ++i) {
      pos_flats.push_back({Matrix<double>(on_line[i])});
      neg_flats.push_back({Matrix<double>(generic[i])});
    }
    const bool pos_plane = flats_on_common_hyperplane(pos_flats).has_value();
    const auto pos_meet = lines_concurrent(polars_of(on_line));
    CHECK(pos_plane);
    REQUIRE(pos_meet);
    CHECK(same_point(*pos_meet, sphere.pole(ell), 1e-8));

    CHECK(flats_on_common_hyperplane(neg_flats).has_value() == lines_concurrent(polars_of(generic)).has_value());
    CHECK_FALSE(lines_concurrent(polars_of(generic)));
  }
}

TEST_CASE("incidence outcomes ignore the scale of homogeneous vectors") {
  auto rng = sampling::trial_rng(34, 0);
  std::uniform_real_distribution<double> s(0.1, 10);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector<double>> pts = {random_vector(rng, 3), random_vector(rng, 3)};
    pts.push_back(0.3 * pts[0] - 1.7 * pts[1]);
    if (t % 2) pts[2] = random_vector(rng, 3);
    std::vector<Flat<double>> a, b;
    for (const auto& p : pts) {
      a.push_back({Matrix<double>(p)});
      b.push_back({Matrix<double>(-s(rng) * p)});
    }
    CHECK(flats_on_common_hyperplane(a).has_value() == flats_on_common_hyperplane(b).has_value());
    const Polarity<double> g(random_symmetric(rng, 3));
    CHECK(conjugate_points(pts[0], pts[1], g) == conjugate_points(Vector<double>(5 * pts[0]), Vector<double>(-0.2 * pts[1]), g));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "funkhilbert/trig.hpp"

using namespace fh;

namespace {

const Geometry E2(Kind::Euclidean, 2);
const Geometry S2(Kind::Spherical, 2);
const Geometry H2(Kind::Hyperbolic, 2);

Vec v2(double a, double b) { return Eigen::Vector2d(a, b); }
Vec v3(double a, double b, double c) { return Eigen::Vector3d(a, b, c); }

// Law of cosines for the side c opposite gamma.
double law_of_cosines_residual(const Triangle& t) {
  const double a = t.a(), b = t.b(), c = t.c(), g = t.gamma();
  switch (t.geometry().kind()) {
    case Kind::Euclidean:
      return std::abs(c * c - (a * a + b * b - 2 * a * b * std::cos(g))) / (c * c);
    case Kind::Spherical:
      return std::abs(std::cos(c) - (std::cos(a) * std::cos(b) + std::sin(a) * std::sin(b) * std::cos(g)));
    case Kind::Hyperbolic:
      return std::abs(std::cosh(c) - (std::cosh(a) * std::cosh(b) - std::sinh(a) * std::sinh(b) * std::cos(g))) /
             std::cosh(c);
  }
  return 1.0;
}

}  // namespace

TEST_CASE("3-4-5 triangle") {
  const Triangle t(Point(E2, v2(3, 0)), Point(E2, v2(0, 4)), Point(E2, v2(0, 0)));
  CHECK(t.a() == doctest::Approx(4.0));
  CHECK(t.b() == doctest::Approx(3.0));
  CHECK(t.c() == doctest::Approx(5.0));
  CHECK(t.gamma() == doctest::Approx(std::numbers::pi / 2));
  CHECK(sine_rule_residual(t) < 1e-15);
  CHECK(right_triangle_residual(t) < 1e-15);
}

TEST_CASE("octant triangle") {
  const Triangle t(Point(S2, v3(1, 0, 0)), Point(S2, v3(0, 1, 0)), Point(S2, v3(0, 0, 1)));
  for (double s : {t.a(), t.b(), t.c(), t.alpha(), t.beta(), t.gamma()}) {
    CHECK(s == doctest::Approx(std::numbers::pi / 2));
  }
  CHECK(right_triangle_residual(t) < 1e-15);
}

TEST_CASE("degenerate and non-right triangles are rejected") {
  CHECK_THROWS(Triangle(Point(E2, v2(0, 0)), Point(E2, v2(1, 0)), Point(E2, v2(2, 0))));
  const Triangle t(Point(E2, v2(0, 0)), Point(E2, v2(1, 0)), Point(E2, v2(0.3, 0.8)));
  CHECK_THROWS_AS(right_triangle_residual(t), InputError);
}

TEST_CASE("identities on random configurations") {
  Rng rng(31);
  for (const Geometry& g : {E2, S2, H2}) {
    const TrigSampling ts = default_trig_sampling(g);
    for (int i = 0; i < 300; ++i) {
      const Triangle t = random_triangle(rng, g, ts);
      CHECK(law_of_cosines_residual(t) < 1e-10);
      if (g.kind() == Kind::Euclidean) CHECK(t.alpha() + t.beta() + t.gamma() == doctest::Approx(std::numbers::pi));
      if (g.kind() == Kind::Spherical) CHECK(t.alpha() + t.beta() + t.gamma() > std::numbers::pi);
      if (g.kind() == Kind::Hyperbolic) CHECK(t.alpha() + t.beta() + t.gamma() < std::numbers::pi);
      CHECK(sine_rule_residual(t) <= 1e-10);
      CHECK(right_triangle_residual(random_right_triangle(rng, g, ts)) <= 1e-10);
      CHECK(cevian_residual(t, random_cevian_foot(rng, t)) <= 1e-10);

      const Hyperplane line = random_transversal(rng, t);
      CHECK(menelaus_residual(t, line) <= 1e-10);
      CHECK(menelaus_perturbed_residual(t, line, 1e-3) > 1e-6);

      const PencilInstance p = random_pencil(rng, g);
      CHECK(pencil_residual(p.pencil, p.t1, p.t2) <= 1e-10);
    }
  }
}

TEST_CASE("Menelaus points lie on their lines") {
  Rng rng(32);
  for (const Geometry& g : {E2, S2, H2}) {
    const Triangle t = random_triangle(rng, g, default_trig_sampling(g));
    const Hyperplane line = random_transversal(rng, t);
    const MenelausPoints m = menelaus_points(t, line);
    CHECK(std::abs(line.signed_value(m.a1)) < 1e-12);
    CHECK(dist_to_geodesic(t.B(), t.C(), m.a1) < 1e-10);
    CHECK(dist_to_geodesic(t.C(), t.A(), m.b1) < 1e-10);
    CHECK(dist_to_geodesic(t.A(), t.B(), m.c1) < 1e-10);
    CHECK(menelaus_product(t, m) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("pencil cross ratio in the Euclidean plane equals the sine cross ratio of the angles") {
  const Point o = Point(E2, v2(0, 0));
  std::array<TangentVector, 4> dirs{TangentVector(o, v2(1, 0.2)), TangentVector(o, v2(1, 0.5)),
                                    TangentVector(o, v2(1, 1.1)), TangentVector(o, v2(1, 2.0))};
  for (auto& d : dirs) d = d.normalized();
  const Pencil p{o, dirs};
  const Hyperplane x1 = Hyperplane::euclidean(v2(1, 0), 1.0);
  const Hyperplane x2 = Hyperplane::euclidean(v2(1, 0.3), 2.0);
  CHECK(pencil_trace_cross_ratio(p, x1) == doctest::Approx(pencil_angle_cross_ratio(p)).epsilon(1e-12));
  CHECK(pencil_trace_cross_ratio(p, x2) == doctest::Approx(pencil_angle_cross_ratio(p)).epsilon(1e-12));
  // On the line x = 1 the traces sit at heights 0.2, 0.5, 1.1, 2.0.
  CHECK(pencil_trace_cross_ratio(p, x1) == doctest::Approx((1.5 / 0.9) * (0.9 / 0.3)));
}

TEST_CASE("chord triangle witness") {
  Rng rng(33);
  for (const Geometry& g : {E2, S2, H2}) {
    for (int i = 0; i < 50; ++i) {
      const ConvexBody body = random_body(rng, g);
      const ChordTriangleWitness w = chord_triangle_witness(body, random_interior_point(rng, body),
                                                            random_interior_point(rng, body),
                                                            random_interior_point(rng, body));
      CHECK(std::abs(w.menelaus_log - w.funk_sum) <= 1e-9);
      CHECK(w.funk_sum >= w.funk_direct - 1e-12);
    }
  }
}

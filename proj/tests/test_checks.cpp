#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "funkhilbert/checks.hpp"
#include "funkhilbert/funk.hpp"

using namespace fh;

TEST_CASE("small trig run passes and is formatted") {
  CheckOptions o;
  o.samples = 40;
  const RunReport r = run_check("trig", o);
  CHECK(r.passed());
  CHECK(r.checks.size() == 24);
  const std::string text = r.format();
  CHECK(text.rfind("check trig  seed=42  samples=40", 0) == 0);
  CHECK(text.find("result: PASS (24/24 checks passed)") != std::string::npos);
}

TEST_CASE("reports do not depend on the number of workers") {
  CheckOptions a;
  a.samples = 30;
  CheckOptions b = a;
  b.jobs = 3;
  CHECK(run_check("funk", a).format() == run_check("funk", b).format());

  CheckOptions c = a;
  c.seed = 7;
  CHECK(run_check("trig", a).format() != run_check("trig", c).format());
}

TEST_CASE("tolerance scale applies to residual checks only") {
  CheckOptions o;
  o.samples = 5;
  o.tol_scale = 1e-30;
  const RunReport r = run_check("convexity", o);
  for (const auto& c : r.checks) {
    if (c.compare == Compare::Below) CHECK(c.threshold == -1e-6);
    if (c.compare == Compare::AtLeast) CHECK(c.threshold == doctest::Approx(-1e-38).scale(0.0));
  }
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_check("nope", CheckOptions{}), InputError);
  CHECK(suite_names().size() == 5);
}

TEST_CASE("shared constructions") {
  Rng rng(51);
  const Geometry g(Kind::Hyperbolic, 2);
  const ConvexBody body = random_polytope(rng, origin(g), default_polytope_options(g));
  for (int i = 0; i < 20; ++i) {
    const TripleSample s = shared_facet_triple(rng, body);
    CHECK(std::abs(additivity_defect(body, s.x, s.y, s.z)) <= 1e-9);
    const TripleSample c = collinear_triple(rng, body);
    CHECK(dist_to_geodesic(c.x, c.z, c.y) < 1e-9);
  }
  const ConvexBody chart = random_chart_polytope(rng, 3);
  CHECK(chart.geometry() == Geometry(Kind::Euclidean, 3));
  CHECK(f3_refinement_order(body, random_interior_point(rng, body), random_interior_point(rng, body), 32) > 1.9);
}

#pragma once

// Property sweeps behind `fhgeo check`. Every sample draws from its own
// stream derive_seed(seed, stream, index), and results are reduced with
// max/min over the index range, so reports do not depend on worker count.

#include <cstdint>
#include <string>
#include <vector>

#include "funkhilbert/bodies.hpp"
#include "funkhilbert/sampling.hpp"

namespace fh {

enum class Compare {
  AtMost,   ///< value <= threshold (residual tolerance, scaled by --tol)
  AtLeast,  ///< value >= threshold (lower bound, scaled by --tol)
  Below,    ///< value < threshold (existence witness, not scaled)
  Above,    ///< value > threshold (detection margin, not scaled)
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  Compare compare = Compare::AtMost;
  double threshold = 0.0;
  int samples = 0;
  int errors = 0;
  std::string first_error;
  bool pass = false;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  int samples = 1000;
  int jobs = 1;
  double tol_scale = 1.0;
};

struct RunReport {
  std::string suite;
  CheckOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Deterministic text form (no timing information).
  std::string format() const;
};

/// Suites: funk, projective, trig, convexity, all. Throws InputError for
/// an unknown suite name.
RunReport run_check(const std::string& suite, const CheckOptions& options);

const std::vector<std::string>& suite_names();

// ----------------------------------------------- shared test constructions

/// Points x, y, z in a polytope such that b(x,y) and b(y,z) lie on the
/// same facet (so F(x,y) + F(y,z) = F(x,z)); y and z are not on the line xy.
struct TripleSample {
  Point x, y, z;
};
TripleSample shared_facet_triple(Rng& rng, const ConvexBody& polytope);

/// Ordered points x, y, z on one geodesic ray inside the body.
TripleSample collinear_triple(Rng& rng, const ConvexBody& body);

/// Euclidean polytope around the chart origin whose lifts to the sphere
/// and the hyperboloid both exist (it lies inside the open unit ball).
ConvexBody random_chart_polytope(Rng& rng, int dim);

/// Largest value of p((v1 + v2) / 2) over consecutive indicatrix samples.
double indicatrix_midpoint_max(const ConvexBody& body, const Point& x, int count);

/// Empirical order log2(e(m) / e(2m)) of the F3 trapezoid rule.
double f3_refinement_order(const ConvexBody& body, const Point& x, const Point& y, int m);

}  // namespace fh

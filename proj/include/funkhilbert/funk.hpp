#pragma once

// Funk and Hilbert metrics of convex bodies in the three model spaces.
//
// Three routes to the Funk distance are provided and are expected to agree:
//   funk_f1        boundary-hit formula along the ray from x through y,
//   funk_f2        supremum over supporting hyperplanes,
//   path_length_f3 integral of the Finsler norm along a path (equal to F on
//                  geodesic segments, which are Funk geodesics).
// With w = id / sin / sinh the per-hyperplane quantity is
// log(w(d(x,pi)) / w(d(y,pi))).

#include <cstdint>
#include <vector>

#include "funkhilbert/bodies.hpp"
#include "funkhilbert/sampling.hpp"

namespace fh {

/// Funk distance from x to y via the boundary point b(x, y). Zero when
/// x = y or when the ray never leaves the body. Spherical bodies must
/// satisfy the Funk diameter condition.
double funk_f1(const ConvexBody& body, const Point& x, const Point& y);

/// Funk distance as the supremum over supporting hyperplanes: a facet
/// maximum for polytopes, a closed-form maximum for balls.
double funk_f2(const ConvexBody& body, const Point& x, const Point& y);

/// Finsler (Minkowski functional) norm of xi at its base point, computed
/// from the facet normals: sup_pi w'(d)/w(d) * <eta_pi(x), xi>, floored at 0.
/// Balls use the ray-exit form.
double finsler_norm(const ConvexBody& body, const TangentVector& xi);

/// Finsler norm from the exit distance along xi: |xi| * w'(t)/w(t).
double finsler_norm_along_ray(const ConvexBody& body, const TangentVector& xi);

struct IndicatrixSample {
  double theta;
  TangentVector vec;
  /// Components in the orthonormal tangent basis used for theta.
  double vx;
  double vy;
  /// Set when the norm vanishes in this direction (no boundary hit).
  bool unbounded;
};

/// `count` points on the unit sphere of the Finsler norm at x (dim 2).
std::vector<IndicatrixSample> indicatrix_sample(const ConvexBody& body, const Point& x, int count);

/// Piecewise-geodesic curve through the given vertices.
struct PolyPath {
  std::vector<Point> vertices;
  int subdivisions = 1024;  ///< trapezoid panels per segment
};

/// Finsler length of the path (composite trapezoid rule per segment).
double path_length_f3(const ConvexBody& body, const PolyPath& path);

/// Symmetrized Funk distance. Spherical bodies only need to lie in a
/// hemisphere.
double hilbert(const ConvexBody& body, const Point& x, const Point& y);

/// F(x,y) + F(y,z) - F(x,z).
double additivity_defect(const ConvexBody& body, const Point& x, const Point& y, const Point& z);

/// Constant-speed geodesic t -> exp(direction, speed * t).
struct Geodesic {
  TangentVector direction;
  double speed = 1.0;

  Point at(double t) const;
};

/// F(x, a(t-h)) - 2 F(x, a(t)) + F(x, a(t+h)).
double second_difference(const ConvexBody& body, const Point& x, const Geodesic& alpha, double t,
                         double h);

struct ConvexityProbe {
  double scaled_value;  ///< second difference / h^2
  Point x;
  Geodesic alpha;
  double h;
};

/// Randomized search for the most negative scaled second difference of
/// y -> F(x, y) over `restarts` random configurations.
ConvexityProbe most_negative_second_difference(const ConvexBody& body, Rng& rng, int restarts,
                                               double h);

// ------------------------------------------------ upper half-plane model

struct HalfPlanePoint {
  double re;
  double im;
};

Point halfplane_to_hyperboloid(HalfPlanePoint p);
HalfPlanePoint hyperboloid_to_halfplane(const Point& x);
double halfplane_dist(HalfPlanePoint p, HalfPlanePoint q);

/// The ideal triangle bounded by Re z = 0, Re z = 1 and |z - 1/2| = 1/2,
/// as a hyperboloid polytope. Facet 0 is the imaginary axis.
ConvexBody ideal_triangle_body();

bool in_ideal_triangle(HalfPlanePoint p);

/// |slope| of the Euclidean segment from p to its hyperbolic foot on the
/// imaginary axis.
double ideal_triangle_slope(HalfPlanePoint p);

/// Closed-form Funk distance in the ideal triangle for pairs whose ray
/// leaves through the imaginary axis:
///   log( (1 - m2^2) / (1 - m1^2) * m1 / m2 ).
double ideal_triangle_funk(HalfPlanePoint x1, HalfPlanePoint x2);

}  // namespace fh

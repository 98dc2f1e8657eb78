#pragma once

// Open convex bodies: finite intersections of open half-spaces, or metric
// balls (caps on the sphere) handled with exact radial formulas.

#include <optional>
#include <vector>

#include "funkhilbert/spaces.hpp"

namespace fh {

/// Open half-space {x : s(x) > 0}; the plane's normal points inward.
struct HalfSpace {
  Hyperplane plane;

  double value(const Point& x) const { return plane.signed_value(x); }
};

enum class BodyKind { Polytope, Ball };

struct BodyFlags {
  bool hemisphere_ok = false;
  bool funk_diameter_ok = false;
  bool bounded = false;
};

class ConvexBody {
 public:
  /// Intersection of the given half-spaces. Validated on construction.
  static ConvexBody polytope(const Geometry& g, std::vector<HalfSpace> facets, Point witness);
  /// Open metric ball of the given radius. Validated on construction.
  static ConvexBody ball(Point center, double radius);

  const Geometry& geometry() const { return g_; }
  BodyKind kind() const { return kind_; }
  /// Facet list (the index set of supporting half-spaces). Empty for balls.
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const Point& interior_witness() const { return witness_; }
  const BodyFlags& flags() const { return flags_; }

  /// Ball data; the center doubles as the interior witness.
  const Point& center() const { return witness_; }
  double radius() const { return radius_; }

  /// Largest sampled boundary-to-boundary distance found by validate().
  double sampled_diameter() const { return sampled_diameter_; }

 private:
  ConvexBody(Geometry g, BodyKind kind, std::vector<HalfSpace> facets, Point witness, double radius)
      : g_(g), kind_(kind), facets_(std::move(facets)), witness_(std::move(witness)), radius_(radius) {}

  friend ConvexBody validate(const ConvexBody& body);

  Geometry g_;
  BodyKind kind_;
  std::vector<HalfSpace> facets_;
  Point witness_;
  double radius_ = 0.0;
  BodyFlags flags_;
  double sampled_diameter_ = 0.0;
};

/// Recomputes every flag. Throws InputError on an empty interior (witness
/// outside a facet) or when a spherical body is not inside an open
/// hemisphere.
ConvexBody validate(const ConvexBody& body);

bool contains(const ConvexBody& body, const Point& x);

/// Smallest facet value min_i s_i(x) (polytopes), or the signed radial
/// margin (balls). Positive inside, zero on the boundary.
double boundary_margin(const ConvexBody& body, const Point& x);

struct RayHit {
  Point point;
  double param;
  std::vector<int> facet_indices;
};

/// First boundary crossing of the geodesic ray from x with unit direction
/// xi. Empty when the ray stays inside forever.
std::optional<RayHit> ray_exit(const ConvexBody& body, const TangentVector& xi);

/// Supporting hyperplanes at a boundary point (inward-oriented).
std::vector<HalfSpace> supporting_at(const ConvexBody& body, const Point& b);

/// Supporting half-space of a ball at the boundary point in direction v
/// (unit tangent at the center).
HalfSpace ball_support(const ConvexBody& ball, const TangentVector& v);

/// Half-space containing `inside`, bounded by the hyperplane through
/// exp(dir, dist) perpendicular to the geodesic.
HalfSpace facet_at(const TangentVector& dir, double dist);

/// Orients a hyperplane so that `inside` lies in its open half-space.
HalfSpace orient_toward(const Hyperplane& plane, const Point& inside);

}  // namespace fh

#pragma once

// Constant-curvature model spaces in ambient coordinates.
//
//   Euclidean   R^n, ambient length n, dot product.
//   Spherical   unit sphere S^n in R^{n+1}, dot product.
//   Hyperbolic  upper sheet of <x,x>_m = -1 in R^{n,1}, with
//               <x,y>_m = x_1 y_1 + ... + x_n y_n - x_{n+1} y_{n+1}.
//
// The last ambient coordinate is the timelike one for the hyperboloid.

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "funkhilbert/errors.hpp"

namespace fh {

using Vec = Eigen::VectorXd;

enum class Kind { Euclidean, Spherical, Hyperbolic };

std::string_view to_string(Kind kind);
Kind kind_from_string(std::string_view name);

namespace tol {
inline constexpr double manifold = 1e-12;
inline constexpr double roundtrip = 1e-10;
inline constexpr double clamp = 1e-9;
inline constexpr double boundary = 1e-9;
inline constexpr double finite_difference = 1e-6;
}  // namespace tol

class Geometry {
 public:
  Geometry(Kind kind, int dim);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int ambient_dim() const { return kind_ == Kind::Euclidean ? dim_ : dim_ + 1; }
  bool curved() const { return kind_ != Kind::Euclidean; }

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  Kind kind_;
  int dim_;
};

/// Ambient bilinear form of the geometry (dot or Minkowski).
double form(const Geometry& g, const Vec& u, const Vec& v);

/// A point on the model manifold. Construction checks the manifold
/// equation to within tol::clamp and then renormalizes exactly.
class Point {
 public:
  Point(const Geometry& g, Vec coords);

  /// Renormalizes an arbitrary ambient vector onto the manifold (radial
  /// projection). Throws if that is impossible (zero vector, space-like
  /// vector for the hyperboloid).
  static Point project(const Geometry& g, Vec v);

  /// Hyperboloid point above the given spatial coordinates.
  static Point hyperboloid_from_spatial(const Vec& spatial);

  const Geometry& geometry() const { return g_; }
  const Vec& coords() const { return x_; }
  double operator[](int i) const { return x_[i]; }

 private:
  struct Unchecked {};
  Point(const Geometry& g, Vec coords, Unchecked);

  Geometry g_;
  Vec x_;
};

/// A vector tangent to the manifold at `base`. The ambient vector is
/// projected onto the tangent space after a tangency check.
class TangentVector {
 public:
  TangentVector(Point base, Vec vec);

  const Point& base() const { return base_; }
  const Vec& vec() const { return v_; }
  const Geometry& geometry() const { return base_.geometry(); }

  /// Riemannian length.
  double norm() const;
  TangentVector scaled(double factor) const;
  TangentVector normalized() const;

 private:
  Point base_;
  Vec v_;
};

/// Totally geodesic hyperplane. Euclidean: {a.x = b} with |a| = 1.
/// Curved: {<x,n> = 0}, n Euclidean-unit (sphere) or space-like
/// Minkowski-unit (hyperboloid); `offset()` is 0.
class Hyperplane {
 public:
  static Hyperplane euclidean(const Vec& normal, double offset);
  static Hyperplane central(const Geometry& g, const Vec& normal);
  /// Dispatches on the geometry; `offset` must be 0 for curved spaces.
  static Hyperplane make(const Geometry& g, const Vec& normal, double offset);

  const Geometry& geometry() const { return g_; }
  const Vec& normal() const { return n_; }
  double offset() const { return b_; }

  /// s(x) = <x,n> - b. Equals the signed distance (Euclidean), its sine
  /// (sphere) or its hyperbolic sine (hyperboloid).
  double signed_value(const Point& x) const;
  double signed_value(const Vec& x) const;

  Hyperplane flipped() const;

 private:
  Hyperplane(const Geometry& g, Vec n, double b) : g_(g), n_(std::move(n)), b_(b) {}
  Geometry g_;
  Vec n_;
  double b_;
};

double dist(const Point& x, const Point& y);

/// Unit tangent at x of the geodesic from x to y.
TangentVector unit_tangent(const Point& x, const Point& y);

/// Point at arc length t along the geodesic with unit initial velocity xi.
Point exp(const TangentVector& xi, double t);
/// Velocity (unit) of the same geodesic at time t, based at exp(xi, t).
TangentVector exp_velocity(const TangentVector& xi, double t);

double dist_to_hyperplane(const Point& x, const Hyperplane& pi);
/// Nearest point of pi to x.
Point foot(const Point& x, const Hyperplane& pi);
/// Unit tangent at x pointing along the perpendicular toward pi.
TangentVector eta(const Point& x, const Hyperplane& pi);

/// w(d): d, sin d or sinh d.
double weight(Kind kind, double d);
/// w'(d)/w(d): 1/d, cot d or coth d.
double weight_log_derivative(Kind kind, double d);

/// Orthogonal projection (under the form) onto the tangent space at x.
Vec project_to_tangent(const Point& x, const Vec& v);
/// Orthonormal basis of the tangent space at x.
std::vector<Vec> tangent_basis(const Point& x);

/// Distance from p to the complete geodesic through a and b.
double dist_to_geodesic(const Point& a, const Point& b, const Point& p);

/// Angle at `vertex` between the geodesics toward p and q, in [0, pi].
double angle_at(const Point& vertex, const Point& p, const Point& q);

// Two-dimensional helpers: geodesic lines are hyperplanes when dim = 2.

/// Geodesic line through two distinct points (dim 2 only).
Hyperplane line_through(const Point& p, const Point& q);
/// Intersection of two geodesic lines (dim 2 only). For the sphere the
/// candidate closer to `hint` is returned. Throws DomainError when the
/// lines do not meet.
Point intersect_lines(const Hyperplane& l1, const Hyperplane& l2, const Point& hint);

}  // namespace fh

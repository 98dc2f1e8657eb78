#pragma once

// Cross ratios and the central projections from the affine chart
// {x_{n+1} = 1} onto the upper hemisphere (P_s) and onto the hyperboloid
// (P_h). Chart points are Euclidean points of R^n; u' denotes such a point
// and u = (u', 1) its homogeneous lift.

#include <array>

#include "funkhilbert/bodies.hpp"

namespace fh {

/// Four distinct points on one geodesic, in order A1, A2, A3, A4.
class CollinearQuadruple {
 public:
  /// Validates distinctness, collinearity (within 1e-9 of the geodesic
  /// through A1 and A4) and, on the sphere, hemisphere containment.
  explicit CollinearQuadruple(std::array<Point, 4> points);

  const Geometry& geometry() const { return points_[0].geometry(); }
  const Point& operator[](int i) const { return points_[i]; }

 private:
  std::array<Point, 4> points_;
};

/// [A2, A3, A4, A1] = (w(A2A4) / w(A3A4)) * (w(A3A1) / w(A2A1)).
double cross_ratio(const CollinearQuadruple& q);

/// The same expression without validation (used on traces of pencils).
double cross_ratio_of(const Point& a1, const Point& a2, const Point& a3, const Point& a4);

// ----------------------------------------------------------- projections

/// u / |u| for u with last coordinate 1.
Point project_to_sphere(const Vec& u);
/// Rescales a point of the open upper hemisphere to last coordinate 1.
Vec sphere_to_chart(const Point& x);

/// u / sqrt(1 - |u'|^2) for u with last coordinate 1 and |u'| < 1.
Point project_to_hyperboloid(const Vec& u);
Vec hyperboloid_to_chart(const Point& x);

/// (u', 1) for a Euclidean point u'.
Vec homogeneous(const Point& chart_point);

/// P_s or P_h applied to a Euclidean chart point.
Point lift_point(const Point& chart_point, Kind target);
/// Inverse of lift_point: the Euclidean chart point of a curved point.
Point chart_point(const Point& x);

// ------------------------------------------------------- chord identities

/// sin d(P_s u, P_s v) |u| |v| - |u - v| (hyperbolic: sinh, Minkowski
/// magnitudes sqrt(1 - |u'|^2)). Vanishes when the chord u'v' passes
/// through the chart origin.
double chord_residual_literal(const Point& u, const Point& v, Kind target);

/// Same left side against |u - v| sqrt(1 + h^2) (sphere) or
/// |u - v| sqrt(1 - h^2) (hyperboloid), h the distance from the chart origin
/// to the line u'v'. Holds for every pair.
double chord_residual(const Point& u, const Point& v, Kind target);

/// Distance from the origin of R^n to the line through u' and v'.
double chart_line_offset(const Point& u, const Point& v);

// --------------------------------------------------------------- bodies

/// Image of a bounded Euclidean body under P_s or P_h. A facet
/// {a.u' > b} lifts to the central hyperplane with ambient normal (a, -b)
/// (sphere) or (a, b) (hyperboloid, must be space-like). Discs centered at
/// the chart origin lift to balls of radius atan R / atanh R.
ConvexBody lift_body(const ConvexBody& body, Kind target);

struct PerspectivityReport {
  double cross_ratio = 0.0;  ///< |CR(P A_i) - CR(A_i)| (relative)
  double hilbert = 0.0;      ///< |H_lift(P u, P v) - H(u, v)|
  double chord = 0.0;        ///< corrected chord identity at (u, v)
};

/// Residuals of the perspectivity statements for one configuration: a
/// Euclidean body with points u, v inside it, and a collinear chart
/// quadruple.
PerspectivityReport perspectivity_checks(const ConvexBody& body, const Point& u, const Point& v,
                                         const std::array<Point, 4>& quad, Kind target);

}  // namespace fh

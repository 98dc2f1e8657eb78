#include "funkhilbert/projective.hpp"

#include <cmath>
#include <string>

#include "funkhilbert/funk.hpp"
#include "funkhilbert/sampling.hpp"

namespace fh {

namespace {

constexpr double kChartTol = 1e-12;

void require_chart_vector(const Vec& u) {
  if (u.size() < 3) throw InputError("chart vectors need at least three coordinates");
  if (std::abs(u[u.size() - 1] - 1.0) > kChartTol) {
    throw InputError("chart vector must have last coordinate 1");
  }
}

void require_euclidean(const Point& p) {
  if (p.geometry().kind() != Kind::Euclidean) throw InputError("expected a Euclidean chart point");
}

void require_curved(Kind target) {
  if (target == Kind::Euclidean) throw InputError("projection target must be spherical or hyperbolic");
}

// sin d (sphere) or sinh d (hyperboloid) between the lifted points, times the
// magnitudes of the homogeneous vectors.
double chord_lhs(const Point& u, const Point& v, Kind target) {
  const Vec hu = homogeneous(u);
  const Vec hv = homogeneous(v);
  const double d = dist(lift_point(u, target), lift_point(v, target));
  if (target == Kind::Spherical) return std::sin(d) * hu.norm() * hv.norm();
  const double mu = std::sqrt(1.0 - u.coords().squaredNorm());
  const double mv = std::sqrt(1.0 - v.coords().squaredNorm());
  return std::sinh(d) * mu * mv;
}

}  // namespace

CollinearQuadruple::CollinearQuadruple(std::array<Point, 4> points) : points_(std::move(points)) {
  const Geometry& g = points_[0].geometry();
  for (const auto& p : points_) {
    if (!(p.geometry() == g)) throw InputError("quadruple geometry mismatch");
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (points_[i].coords() == points_[j].coords() || dist(points_[i], points_[j]) <= 1e-12) {
        throw InputError("cross ratio needs four distinct points");
      }
    }
  }
  if (g.kind() == Kind::Spherical &&
      !in_open_hemisphere({points_[0], points_[1], points_[2], points_[3]})) {
    throw InputError("spherical quadruple is not inside an open hemisphere");
  }
  for (int i : {1, 2}) {
    if (dist_to_geodesic(points_[0], points_[3], points_[i]) > 1e-9) {
      throw InputError("quadruple is not collinear");
    }
  }
}

double cross_ratio_of(const Point& a1, const Point& a2, const Point& a3, const Point& a4) {
  const Kind k = a1.geometry().kind();
  const auto w = [k](const Point& p, const Point& q) { return weight(k, dist(p, q)); };
  return (w(a2, a4) / w(a3, a4)) * (w(a3, a1) / w(a2, a1));
}

double cross_ratio(const CollinearQuadruple& q) { return cross_ratio_of(q[0], q[1], q[2], q[3]); }

// ----------------------------------------------------------- projections

Point project_to_sphere(const Vec& u) {
  require_chart_vector(u);
  const int n = static_cast<int>(u.size()) - 1;
  return Point::project(Geometry(Kind::Spherical, n), u);
}

Vec sphere_to_chart(const Point& x) {
  if (x.geometry().kind() != Kind::Spherical) throw InputError("expected a spherical point");
  const double last = x[x.geometry().ambient_dim() - 1];
  if (!(last > kChartTol)) throw DomainError("point is not in the open upper hemisphere");
  return x.coords() / last;
}

Point project_to_hyperboloid(const Vec& u) {
  require_chart_vector(u);
  const int n = static_cast<int>(u.size()) - 1;
  const double r2 = u.head(n).squaredNorm();
  if (!(r2 < 1.0)) throw DomainError("chart point is not inside the unit ball");
  return Point::project(Geometry(Kind::Hyperbolic, n), u / std::sqrt(1.0 - r2));
}

Vec hyperboloid_to_chart(const Point& x) {
  if (x.geometry().kind() != Kind::Hyperbolic) throw InputError("expected a hyperbolic point");
  return x.coords() / x[x.geometry().ambient_dim() - 1];
}

Vec homogeneous(const Point& chart_point) {
  require_euclidean(chart_point);
  const int n = chart_point.geometry().dim();
  Vec u(n + 1);
  u.head(n) = chart_point.coords();
  u[n] = 1.0;
  return u;
}

Point lift_point(const Point& chart_point, Kind target) {
  require_curved(target);
  const Vec u = homogeneous(chart_point);
  return target == Kind::Spherical ? project_to_sphere(u) : project_to_hyperboloid(u);
}

Point chart_point(const Point& x) {
  const Vec u = x.geometry().kind() == Kind::Spherical ? sphere_to_chart(x) : hyperboloid_to_chart(x);
  const int n = x.geometry().dim();
  return Point(Geometry(Kind::Euclidean, n), u.head(n));
}

// ------------------------------------------------------- chord identities

double chart_line_offset(const Point& u, const Point& v) {
  require_euclidean(u);
  require_euclidean(v);
  const Vec d = v.coords() - u.coords();
  const double len = d.norm();
  if (!(len > 0.0)) throw DomainError("coincident chart points do not span a line");
  const Vec dir = d / len;
  const Vec& p = u.coords();
  return (p - p.dot(dir) * dir).norm();
}

double chord_residual_literal(const Point& u, const Point& v, Kind target) {
  require_curved(target);
  return std::abs(chord_lhs(u, v, target) - (u.coords() - v.coords()).norm());
}

double chord_residual(const Point& u, const Point& v, Kind target) {
  require_curved(target);
  const double h = chart_line_offset(u, v);
  const double factor = target == Kind::Spherical ? std::sqrt(1.0 + h * h) : std::sqrt(1.0 - h * h);
  return std::abs(chord_lhs(u, v, target) - (u.coords() - v.coords()).norm() * factor);
}

// --------------------------------------------------------------- bodies

ConvexBody lift_body(const ConvexBody& body, Kind target) {
  require_curved(target);
  const Geometry& g = body.geometry();
  if (g.kind() != Kind::Euclidean) throw InputError("only Euclidean chart bodies can be lifted");
  const Geometry out(target, g.dim());

  if (body.kind() == BodyKind::Ball) {
    if (body.center().coords().norm() > kChartTol) {
      throw InputError("only discs centered at the chart origin lift to metric balls");
    }
    const double r = body.radius();
    if (target == Kind::Hyperbolic) {
      if (!(r < 1.0)) throw InputError("disc is not inside the open unit disc");
      return ConvexBody::ball(origin(out), std::atanh(r));
    }
    return ConvexBody::ball(origin(out), std::atan(r));
  }

  if (!body.flags().bounded) throw InputError("only bounded bodies can be lifted");
  std::vector<HalfSpace> facets;
  for (std::size_t i = 0; i < body.facets().size(); ++i) {
    const auto& plane = body.facets()[i].plane;
    Vec n(g.dim() + 1);
    n.head(g.dim()) = plane.normal();
    n[g.dim()] = target == Kind::Spherical ? -plane.offset() : plane.offset();
    if (target == Kind::Hyperbolic && !(form(out, n, n) > 0.0)) {
      throw InputError("facet " + std::to_string(i) + " misses the unit disc; its lift is not space-like");
    }
    facets.push_back(HalfSpace{Hyperplane::central(out, n)});
  }
  // A lifted hyperbolic polytope is bounded exactly when the chart body
  // stays inside the open unit ball.
  ConvexBody lifted = ConvexBody::polytope(out, std::move(facets), lift_point(body.interior_witness(), target));
  if (target == Kind::Hyperbolic && !lifted.flags().bounded) {
    throw InputError("body is not inside the open unit disc");
  }
  return lifted;
}

PerspectivityReport perspectivity_checks(const ConvexBody& body, const Point& u, const Point& v,
                                         const std::array<Point, 4>& quad, Kind target) {
  PerspectivityReport r;
  const double cr = cross_ratio(CollinearQuadruple(quad));
  const double lifted_cr = cross_ratio(CollinearQuadruple({lift_point(quad[0], target),
                                                           lift_point(quad[1], target),
                                                           lift_point(quad[2], target),
                                                           lift_point(quad[3], target)}));
  r.cross_ratio = std::abs(lifted_cr - cr) / cr;

  const ConvexBody lifted = lift_body(body, target);
  r.hilbert = std::abs(hilbert(lifted, lift_point(u, target), lift_point(v, target)) - hilbert(body, u, v));
  r.chord = chord_residual(u, v, target);
  return r;
}

}  // namespace fh

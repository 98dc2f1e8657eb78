#include "funkhilbert/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "funkhilbert/sampling.hpp"

namespace fh {

namespace {

constexpr double kWitnessMargin = 1e-10;

int direction_sample_count(int dim) {
  if (dim == 2) return 360;
  if (dim == 3) return 600;
  return 1500;
}

// Deterministic spread of unit tangent directions at x.
std::vector<TangentVector> spread_directions(const Point& x) {
  const auto basis = tangent_basis(x);
  const int dim = x.geometry().dim();
  const int count = direction_sample_count(dim);
  std::vector<TangentVector> out;
  out.reserve(count);
  for (const auto& c : unit_sphere_spread(dim, count)) {
    Vec v = Vec::Zero(x.geometry().ambient_dim());
    for (int i = 0; i < dim; ++i) v += c[i] * basis[i];
    out.emplace_back(x, v);
  }
  return out;
}

// Exit parameter through a single facet; +inf when the ray never meets it.
double facet_exit(const Geometry& g, const HalfSpace& h, const TangentVector& xi) {
  const double a = h.value(xi.base());
  const double b = form(g, xi.vec(), h.plane.normal());
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (g.kind()) {
    case Kind::Euclidean:
      return b < 0.0 ? a / -b : inf;
    case Kind::Spherical:
      // a cos t + b sin t has exactly one root in (0, pi).
      return std::atan2(a, -b);
    case Kind::Hyperbolic:
      return (b < 0.0 && -b > a) ? std::atanh(a / -b) : inf;
  }
  return inf;
}

// Exit parameter of the ray from inside a ball.
double ball_exit(const ConvexBody& body, const TangentVector& xi) {
  const auto& g = body.geometry();
  const Vec& c = body.center().coords();
  const Vec& x = xi.base().coords();
  const Vec& v = xi.vec();
  const double r = body.radius();
  switch (g.kind()) {
    case Kind::Euclidean: {
      const Vec d = x - c;
      const double p = v.dot(d);
      return -p + std::sqrt(std::max(0.0, p * p - d.squaredNorm() + r * r));
    }
    case Kind::Spherical: {
      // <c, cos t x + sin t v> = cos r, first positive root.
      const double a = c.dot(x);
      const double b = c.dot(v);
      const double rho = std::hypot(a, b);
      const double phi = std::atan2(b, a);
      return phi + std::acos(std::clamp(std::cos(r) / rho, -1.0, 1.0));
    }
    case Kind::Hyperbolic: {
      // A cosh t + B sinh t = cosh r with u = e^t.
      const double a = -form(g, c, x);
      const double b = -form(g, c, v);
      const double cr = std::cosh(r);
      const double disc = std::max(0.0, cr * cr - (a - b) * (a + b));
      return std::log((cr + std::sqrt(disc)) / (a + b));
    }
  }
  return 0.0;
}

}  // namespace

HalfSpace orient_toward(const Hyperplane& plane, const Point& inside) {
  const double s = plane.signed_value(inside);
  if (s == 0.0) throw DomainError("reference point lies on the hyperplane");
  return HalfSpace{s > 0.0 ? plane : plane.flipped()};
}

HalfSpace facet_at(const TangentVector& dir, double distance) {
  const auto& g = dir.geometry();
  const TangentVector vel = exp_velocity(dir, distance);
  const Vec inward = -vel.vec();
  if (g.curved()) return HalfSpace{Hyperplane::central(g, inward)};
  return HalfSpace{Hyperplane::euclidean(inward, inward.dot(vel.base().coords()))};
}

ConvexBody ConvexBody::polytope(const Geometry& g, std::vector<HalfSpace> facets, Point witness) {
  if (facets.empty()) throw InputError("a polytope needs at least one facet");
  if (!(witness.geometry() == g)) throw InputError("witness geometry mismatch");
  for (const auto& f : facets) {
    if (!(f.plane.geometry() == g)) throw InputError("facet geometry mismatch");
  }
  return validate(ConvexBody(g, BodyKind::Polytope, std::move(facets), std::move(witness), 0.0));
}

ConvexBody ConvexBody::ball(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("ball radius must be positive");
  const Geometry g = center.geometry();
  return validate(ConvexBody(g, BodyKind::Ball, {}, std::move(center), radius));
}

ConvexBody validate(const ConvexBody& body) {
  ConvexBody out = body;
  const auto& g = body.geometry();
  BodyFlags flags;

  if (body.kind() == BodyKind::Ball) {
    const double r = body.radius();
    if (g.kind() == Kind::Spherical) {
      if (r >= std::numbers::pi / 2) throw InputError("spherical cap is not inside an open hemisphere");
      flags.hemisphere_ok = true;
      flags.funk_diameter_ok = 2.0 * r < std::numbers::pi / 2 - 1e-6;
    } else {
      flags.hemisphere_ok = true;
      flags.funk_diameter_ok = true;
    }
    flags.bounded = true;
    out.flags_ = flags;
    out.sampled_diameter_ = 2.0 * r;
    return out;
  }

  for (const auto& f : body.facets()) {
    if (f.value(body.interior_witness()) < kWitnessMargin) {
      throw InputError("interior witness violates a facet (empty interior)");
    }
  }

  // Boundary samples from rays out of the witness.
  std::vector<Point> boundary;
  bool all_exit = true;
  for (const auto& dir : spread_directions(body.interior_witness())) {
    double t = std::numeric_limits<double>::infinity();
    for (const auto& f : body.facets()) t = std::min(t, facet_exit(g, f, dir));
    if (std::isfinite(t)) {
      boundary.push_back(exp(dir, t));
    } else {
      all_exit = false;
    }
  }

  flags.bounded = all_exit;
  if (g.kind() == Kind::Spherical) {
    std::vector<Point> probe = boundary;
    probe.push_back(body.interior_witness());
    flags.hemisphere_ok = in_open_hemisphere(probe);
    if (!flags.hemisphere_ok) throw InputError("spherical body is not inside an open hemisphere");
    // The farthest pair has the smallest inner product.
    Eigen::MatrixXd pts(g.ambient_dim(), static_cast<Eigen::Index>(boundary.size()));
    for (std::size_t i = 0; i < boundary.size(); ++i) pts.col(static_cast<Eigen::Index>(i)) = boundary[i].coords();
    double diameter = 0.0;
    if (boundary.size() > 1) {
      Eigen::Index bi = 0, bj = 0;
      (pts.transpose() * pts).minCoeff(&bi, &bj);
      diameter = dist(boundary[bi], boundary[bj]);
    }
    out.sampled_diameter_ = diameter;
    flags.funk_diameter_ok = diameter < std::numbers::pi / 2 - 1e-6;
  } else {
    flags.hemisphere_ok = true;
    flags.funk_diameter_ok = true;
    out.sampled_diameter_ = all_exit ? 0.0 : std::numeric_limits<double>::infinity();
    if (all_exit) {
      for (std::size_t i = 0; i < boundary.size(); ++i) {
        for (std::size_t j = i + 1; j < boundary.size(); j += 7) {
          out.sampled_diameter_ = std::max(out.sampled_diameter_, dist(boundary[i], boundary[j]));
        }
      }
    }
  }
  out.flags_ = flags;
  return out;
}

double boundary_margin(const ConvexBody& body, const Point& x) {
  if (!(x.geometry() == body.geometry())) throw InputError("point geometry mismatch");
  if (body.kind() == BodyKind::Ball) return body.radius() - dist(body.center(), x);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& f : body.facets()) m = std::min(m, f.value(x));
  return m;
}

bool contains(const ConvexBody& body, const Point& x) { return boundary_margin(body, x) > 0.0; }

std::optional<RayHit> ray_exit(const ConvexBody& body, const TangentVector& xi) {
  const auto& g = body.geometry();
  if (!(xi.geometry() == g)) throw InputError("direction geometry mismatch");
  if (!contains(body, xi.base())) throw DomainError("ray origin is outside the body");
  const TangentVector dir = xi.normalized();

  if (body.kind() == BodyKind::Ball) {
    const double t = ball_exit(body, dir);
    return RayHit{exp(dir, t), t, {}};
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : body.facets()) best = std::min(best, facet_exit(g, f, dir));
  if (!std::isfinite(best)) return std::nullopt;

  RayHit hit{exp(dir, best), best, {}};
  for (int i = 0; i < static_cast<int>(body.facets().size()); ++i) {
    if (std::abs(body.facets()[i].value(hit.point)) <= tol::boundary) hit.facet_indices.push_back(i);
  }
  return hit;
}

HalfSpace ball_support(const ConvexBody& ball, const TangentVector& v) {
  return facet_at(v.normalized(), ball.radius());
}

std::vector<HalfSpace> supporting_at(const ConvexBody& body, const Point& b) {
  const double margin = boundary_margin(body, b);
  if (std::abs(margin) > tol::boundary) throw DomainError("point is not on the boundary");

  if (body.kind() == BodyKind::Ball) {
    return {ball_support(body, unit_tangent(body.center(), b))};
  }
  std::vector<HalfSpace> out;
  for (const auto& f : body.facets()) {
    if (std::abs(f.value(b)) <= tol::boundary) out.push_back(f);
  }
  return out;
}

}  // namespace fh

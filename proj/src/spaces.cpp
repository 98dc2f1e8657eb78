#include "funkhilbert/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fh {

namespace {

void require_dim(const Geometry& g, const Vec& v, const char* what) {
  if (v.size() != g.ambient_dim()) {
    throw InputError(std::string(what) + ": expected " + std::to_string(g.ambient_dim()) +
                     " ambient coordinates, got " + std::to_string(v.size()));
  }
}

void require_same(const Geometry& a, const Geometry& b) {
  if (!(a == b)) throw InputError("geometry mismatch");
}

void require_plane(const Geometry& g) {
  if (g.dim() != 2) throw InputError("operation requires a two-dimensional geometry");
}

// Minkowski form with the last coordinate timelike.
double minkowski(const Vec& u, const Vec& v) {
  const auto n = u.size() - 1;
  return u.head(n).dot(v.head(n)) - u[n] * v[n];
}

Vec minkowski_dual(Vec v) {
  v[v.size() - 1] = -v[v.size() - 1];
  return v;
}

Vec cross3(const Vec& a, const Vec& b) {
  return Eigen::Vector3d(a.head<3>()).cross(Eigen::Vector3d(b.head<3>()));
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Euclidean: return "euclidean";
    case Kind::Spherical: return "spherical";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Kind kind_from_string(std::string_view name) {
  if (name == "euclidean") return Kind::Euclidean;
  if (name == "spherical") return Kind::Spherical;
  if (name == "hyperbolic") return Kind::Hyperbolic;
  throw InputError("unknown geometry '" + std::string(name) + "'");
}

Geometry::Geometry(Kind kind, int dim) : kind_(kind), dim_(dim) {
  if (dim < 2) throw InputError("intrinsic dimension must be at least 2");
}

double form(const Geometry& g, const Vec& u, const Vec& v) {
  require_dim(g, u, "form");
  require_dim(g, v, "form");
  return g.kind() == Kind::Hyperbolic ? minkowski(u, v) : u.dot(v);
}

// ---------------------------------------------------------------- Point

Point::Point(const Geometry& g, Vec coords, Unchecked) : g_(g), x_(std::move(coords)) {}

Point::Point(const Geometry& g, Vec coords) : g_(g), x_(std::move(coords)) {
  require_dim(g_, x_, "point");
  if (!x_.allFinite()) throw InputError("point has non-finite coordinates");
  switch (g_.kind()) {
    case Kind::Euclidean:
      break;
    case Kind::Spherical: {
      const double q = x_.squaredNorm();
      if (std::abs(q - 1.0) > tol::clamp) throw InputError("point is not on the unit sphere");
      x_ /= std::sqrt(q);
      break;
    }
    case Kind::Hyperbolic: {
      const double q = minkowski(x_, x_);
      if (std::abs(q + 1.0) > tol::clamp || x_[x_.size() - 1] <= 0.0) {
        throw InputError("point is not on the upper hyperboloid sheet");
      }
      x_ /= std::sqrt(-q);
      break;
    }
  }
}

Point Point::project(const Geometry& g, Vec v) {
  require_dim(g, v, "point");
  switch (g.kind()) {
    case Kind::Euclidean:
      break;
    case Kind::Spherical: {
      const double n = v.norm();
      if (!(n > 0.0)) throw InputError("cannot project the zero vector onto the sphere");
      v /= n;
      break;
    }
    case Kind::Hyperbolic: {
      const double q = minkowski(v, v);
      if (!(q < 0.0)) throw InputError("vector is not time-like");
      v /= std::sqrt(-q);
      if (v[v.size() - 1] < 0.0) v = -v;
      break;
    }
  }
  return Point(g, std::move(v), Unchecked{});
}

Point Point::hyperboloid_from_spatial(const Vec& spatial) {
  Vec x(spatial.size() + 1);
  x.head(spatial.size()) = spatial;
  x[spatial.size()] = std::sqrt(1.0 + spatial.squaredNorm());
  return Point(Geometry(Kind::Hyperbolic, static_cast<int>(spatial.size())), std::move(x),
               Unchecked{});
}

// -------------------------------------------------------- TangentVector

Vec project_to_tangent(const Point& x, const Vec& v) {
  const auto& g = x.geometry();
  require_dim(g, v, "tangent vector");
  switch (g.kind()) {
    case Kind::Euclidean: return v;
    case Kind::Spherical: return v - x.coords().dot(v) * x.coords();
    case Kind::Hyperbolic: return v + minkowski(x.coords(), v) * x.coords();
  }
  return v;
}

TangentVector::TangentVector(Point base, Vec vec) : base_(std::move(base)), v_(std::move(vec)) {
  const auto& g = base_.geometry();
  require_dim(g, v_, "tangent vector");
  if (g.curved()) {
    const double offness = std::abs(form(g, base_.coords(), v_));
    const double scale = std::max(1.0, v_.norm());
    if (offness > tol::clamp * scale) throw InputError("vector is not tangent at its base point");
    v_ = project_to_tangent(base_, v_);
  }
}

double TangentVector::norm() const {
  return std::sqrt(std::max(0.0, form(geometry(), v_, v_)));
}

TangentVector TangentVector::scaled(double factor) const {
  return TangentVector(base_, v_ * factor);
}

TangentVector TangentVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw DomainError("cannot normalize a zero tangent vector");
  return scaled(1.0 / n);
}

// ----------------------------------------------------------- Hyperplane

Hyperplane Hyperplane::euclidean(const Vec& normal, double offset) {
  const double n = normal.norm();
  if (!(n > 0.0) || !normal.allFinite()) throw InputError("hyperplane normal must be nonzero");
  return Hyperplane(Geometry(Kind::Euclidean, static_cast<int>(normal.size())), normal / n,
                    offset / n);
}

Hyperplane Hyperplane::central(const Geometry& g, const Vec& normal) {
  if (!g.curved()) throw InputError("central hyperplanes are for curved geometries");
  require_dim(g, normal, "hyperplane normal");
  const double q = form(g, normal, normal);
  if (g.kind() == Kind::Hyperbolic && !(q > 0.0)) {
    throw InputError("hyperbolic hyperplane normal must be space-like");
  }
  if (!(q > 0.0)) throw InputError("hyperplane normal must be nonzero");
  return Hyperplane(g, normal / std::sqrt(q), 0.0);
}

Hyperplane Hyperplane::make(const Geometry& g, const Vec& normal, double offset) {
  if (g.curved()) {
    if (offset != 0.0) throw InputError("curved hyperplanes pass through the origin; offset must be 0");
    return central(g, normal);
  }
  require_dim(g, normal, "hyperplane normal");
  return euclidean(normal, offset);
}

double Hyperplane::signed_value(const Vec& x) const { return form(g_, x, n_) - b_; }
double Hyperplane::signed_value(const Point& x) const {
  require_same(g_, x.geometry());
  return signed_value(x.coords());
}

Hyperplane Hyperplane::flipped() const { return Hyperplane(g_, -n_, -b_); }

// ------------------------------------------------------------ Geodesics

double dist(const Point& x, const Point& y) {
  const auto& g = x.geometry();
  require_same(g, y.geometry());
  const Vec& a = x.coords();
  const Vec& b = y.coords();
  switch (g.kind()) {
    case Kind::Euclidean:
      return (a - b).norm();
    case Kind::Spherical: {
      if (std::abs(a.dot(b)) > 1.0 + tol::clamp) throw InputError("invalid spherical point pair");
      return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
    }
    case Kind::Hyperbolic: {
      const double c = -minkowski(a, b);
      if (c < 1.0 - tol::clamp) throw InputError("invalid hyperbolic point pair");
      if (c > 2.0) return std::acosh(c);
      const Vec d = a - b;
      return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, minkowski(d, d))));
    }
  }
  return 0.0;
}

TangentVector unit_tangent(const Point& x, const Point& y) {
  const auto& g = x.geometry();
  require_same(g, y.geometry());
  const Vec diff = y.coords() - x.coords();
  if (g.kind() == Kind::Spherical && (x.coords() + y.coords()).norm() <= tol::manifold) {
    throw DomainError("antipodal points have no unique geodesic");
  }
  Vec v = project_to_tangent(x, diff);
  const double n = std::sqrt(std::max(0.0, form(g, v, v)));
  if (!(n > 0.0) || diff.norm() == 0.0) throw DomainError("coincident points have no unit tangent");
  return TangentVector(x, v / n);
}

Point exp(const TangentVector& xi, double t) {
  const auto& g = xi.geometry();
  if (std::abs(xi.norm() - 1.0) > tol::clamp) throw InputError("exp expects a unit tangent vector");
  const Vec& x = xi.base().coords();
  const Vec& v = xi.vec();
  switch (g.kind()) {
    case Kind::Euclidean: return Point(g, x + t * v);
    case Kind::Spherical: return Point::project(g, std::cos(t) * x + std::sin(t) * v);
    case Kind::Hyperbolic: return Point::project(g, std::cosh(t) * x + std::sinh(t) * v);
  }
  return xi.base();
}

TangentVector exp_velocity(const TangentVector& xi, double t) {
  const auto& g = xi.geometry();
  const Point p = exp(xi, t);
  const Vec& x = xi.base().coords();
  const Vec& v = xi.vec();
  Vec w;
  switch (g.kind()) {
    case Kind::Euclidean: w = v; break;
    case Kind::Spherical: w = -std::sin(t) * x + std::cos(t) * v; break;
    case Kind::Hyperbolic: w = std::sinh(t) * x + std::cosh(t) * v; break;
  }
  w = project_to_tangent(p, w);
  const double n = std::sqrt(form(g, w, w));
  return TangentVector(p, w / n);
}

// ---------------------------------------------------------- Hyperplanes

double dist_to_hyperplane(const Point& x, const Hyperplane& pi) {
  const double s = std::abs(pi.signed_value(x));
  switch (x.geometry().kind()) {
    case Kind::Euclidean: return s;
    case Kind::Spherical: return std::asin(std::min(1.0, s));
    case Kind::Hyperbolic: return std::asinh(s);
  }
  return s;
}

Point foot(const Point& x, const Hyperplane& pi) {
  const auto& g = x.geometry();
  const double s = pi.signed_value(x);
  const Vec& n = pi.normal();
  switch (g.kind()) {
    case Kind::Euclidean:
      return Point(g, x.coords() - s * n);
    case Kind::Spherical:
      if (std::abs(s) >= 1.0 - tol::manifold) {
        throw DomainError("point is a pole of the hyperplane; the foot is not unique");
      }
      return Point::project(g, x.coords() - s * n);
    case Kind::Hyperbolic:
      return Point::project(g, x.coords() - s * n);
  }
  return x;
}

TangentVector eta(const Point& x, const Hyperplane& pi) {
  const auto& g = x.geometry();
  const double s = pi.signed_value(x);
  if (std::abs(s) <= 1e-15) throw DomainError("point lies on the hyperplane");
  // Tangent component of the normal, pointing toward the hyperplane.
  Vec v = project_to_tangent(x, pi.normal());
  const double n = std::sqrt(std::max(0.0, form(g, v, v)));
  if (!(n > 0.0)) throw DomainError("point is a pole of the hyperplane");
  v /= n;
  if (s > 0.0) v = -v;
  return TangentVector(x, v);
}

double weight(Kind kind, double d) {
  switch (kind) {
    case Kind::Euclidean: return d;
    case Kind::Spherical: return std::sin(d);
    case Kind::Hyperbolic: return std::sinh(d);
  }
  return d;
}

double weight_log_derivative(Kind kind, double d) {
  switch (kind) {
    case Kind::Euclidean: return 1.0 / d;
    case Kind::Spherical: return 1.0 / std::tan(d);
    case Kind::Hyperbolic: return 1.0 / std::tanh(d);
  }
  return 1.0 / d;
}

std::vector<Vec> tangent_basis(const Point& x) {
  const auto& g = x.geometry();
  const int m = g.ambient_dim();
  std::vector<Vec> basis;
  for (int i = 0; i < m && static_cast<int>(basis.size()) < g.dim(); ++i) {
    Vec v = project_to_tangent(x, Vec::Unit(m, i));
    for (const Vec& b : basis) v -= form(g, v, b) * b;
    const double q = form(g, v, v);
    if (q > 1e-8) basis.push_back(v / std::sqrt(q));
  }
  return basis;
}

double dist_to_geodesic(const Point& a, const Point& b, const Point& p) {
  const auto& g = a.geometry();
  require_same(g, b.geometry());
  require_same(g, p.geometry());
  if (!g.curved()) {
    const Vec dir = (b.coords() - a.coords()).normalized();
    const Vec r = p.coords() - a.coords();
    return (r - r.dot(dir) * dir).norm();
  }
  // Remove the component in span{a, b}; what is left measures sin / sinh.
  Eigen::Matrix2d gram;
  gram << form(g, a.coords(), a.coords()), form(g, a.coords(), b.coords()),
      form(g, b.coords(), a.coords()), form(g, b.coords(), b.coords());
  const Eigen::Vector2d rhs(form(g, p.coords(), a.coords()), form(g, p.coords(), b.coords()));
  const Eigen::Vector2d c = gram.fullPivLu().solve(rhs);
  const Vec perp = p.coords() - c[0] * a.coords() - c[1] * b.coords();
  const double s = std::sqrt(std::max(0.0, form(g, perp, perp)));
  return g.kind() == Kind::Spherical ? std::asin(std::min(1.0, s)) : std::asinh(s);
}

double angle_at(const Point& vertex, const Point& p, const Point& q) {
  const auto u = unit_tangent(vertex, p);
  const auto v = unit_tangent(vertex, q);
  const double c = form(vertex.geometry(), u.vec(), v.vec());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

Hyperplane line_through(const Point& p, const Point& q) {
  const auto& g = p.geometry();
  require_plane(g);
  require_same(g, q.geometry());
  switch (g.kind()) {
    case Kind::Euclidean: {
      Vec hp(3), hq(3);
      hp << p[0], p[1], 1.0;
      hq << q[0], q[1], 1.0;
      const Vec l = cross3(hp, hq);
      if (l.head(2).norm() == 0.0) throw DomainError("coincident points do not span a line");
      return Hyperplane::euclidean(l.head(2), -l[2]);
    }
    case Kind::Spherical: {
      const Vec n = cross3(p.coords(), q.coords());
      if (n.norm() <= tol::manifold) throw DomainError("points do not span a unique great circle");
      return Hyperplane::central(g, n);
    }
    case Kind::Hyperbolic: {
      // <x,n>_m = (J n) . x, so J n is orthogonal to both points.
      const Vec n = minkowski_dual(cross3(p.coords(), q.coords()));
      if (n.norm() <= tol::manifold) throw DomainError("coincident points do not span a line");
      return Hyperplane::central(g, n);
    }
  }
  throw InputError("unreachable");
}

Point intersect_lines(const Hyperplane& l1, const Hyperplane& l2, const Point& hint) {
  const auto& g = l1.geometry();
  require_plane(g);
  require_same(g, l2.geometry());
  switch (g.kind()) {
    case Kind::Euclidean: {
      Vec h1(3), h2(3);
      h1 << l1.normal(), -l1.offset();
      h2 << l2.normal(), -l2.offset();
      const Vec x = cross3(h1, h2);
      if (std::abs(x[2]) <= 1e-14) throw DomainError("parallel lines do not meet");
      return Point(g, x.head(2) / x[2]);
    }
    case Kind::Spherical: {
      const Vec x = cross3(l1.normal(), l2.normal());
      if (x.norm() <= tol::manifold) throw DomainError("lines coincide");
      Point p = Point::project(g, x);
      Point q = Point::project(g, -x);
      return dist(p, hint) <= dist(q, hint) ? p : q;
    }
    case Kind::Hyperbolic: {
      const Vec x = cross3(minkowski_dual(l1.normal()), minkowski_dual(l2.normal()));
      if (!(minkowski(x, x) < -1e-14 * x.squaredNorm())) {
        throw DomainError("hyperbolic lines do not meet");
      }
      return Point::project(g, x);
    }
  }
  throw InputError("unreachable");
}

}  // namespace fh

#include "funkhilbert/funk.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace fh {

namespace {

void require_inside(const ConvexBody& body, const Point& p, const char* name) {
  if (!contains(body, p)) throw DomainError(std::string(name) + " is outside the body");
}

void require_funk_body(const ConvexBody& body) {
  if (body.geometry().kind() == Kind::Spherical && !body.flags().funk_diameter_ok) {
    throw DomainError("spherical Funk metric needs a body of diameter < pi/2");
  }
}

bool same_point(const Point& x, const Point& y) { return x.coords() == y.coords(); }

double funk_unchecked(const ConvexBody& body, const Point& x, const Point& y) {
  require_inside(body, x, "x");
  require_inside(body, y, "y");
  if (same_point(x, y)) return 0.0;
  const double s = dist(x, y);
  if (s == 0.0) return 0.0;
  const auto hit = ray_exit(body, unit_tangent(x, y));
  if (!hit) return 0.0;
  const Kind k = body.geometry().kind();
  return std::log(weight(k, hit->param) / weight(k, hit->param - s));
}

// Largest value of (ax - <bx, v>) / (ay - <by, v>) over unit tangent v at
// the ball center.
double max_linear_fractional(const Geometry& g, double ax, const Vec& bx, double ay, const Vec& by) {
  const double qa = ay * ay - form(g, by, by);
  const double qb = ax * ay - form(g, bx, by);
  const double qc = ax * ax - form(g, bx, bx);
  const double disc = std::sqrt(std::max(0.0, qb * qb - qa * qc));
  if (qb >= 0.0) return (qb + disc) / qa;
  return qc / (qb - disc);
}

// Support data of the ball's tangent planes: w(d(p, pi_v)) = alpha - <beta, v>.
std::pair<double, Vec> ball_support_terms(const ConvexBody& body, const Point& p) {
  const auto& g = body.geometry();
  const Vec& c = body.center().coords();
  const double r = body.radius();
  switch (g.kind()) {
    case Kind::Euclidean:
      return {r, p.coords() - c};
    case Kind::Spherical:
      return {std::sin(r) * c.dot(p.coords()),
              std::cos(r) * project_to_tangent(body.center(), p.coords())};
    case Kind::Hyperbolic:
      return {-std::sinh(r) * form(g, c, p.coords()),
              std::cosh(r) * project_to_tangent(body.center(), p.coords())};
  }
  return {0.0, Vec()};
}

}  // namespace

double funk_f1(const ConvexBody& body, const Point& x, const Point& y) {
  require_funk_body(body);
  return funk_unchecked(body, x, y);
}

double funk_f2(const ConvexBody& body, const Point& x, const Point& y) {
  require_funk_body(body);
  require_inside(body, x, "x");
  require_inside(body, y, "y");
  if (same_point(x, y)) return 0.0;
  const Kind k = body.geometry().kind();

  if (body.kind() == BodyKind::Ball) {
    const auto [ax, bx] = ball_support_terms(body, x);
    const auto [ay, by] = ball_support_terms(body, y);
    const double ratio = max_linear_fractional(body.geometry(), ax, bx, ay, by);
    return std::max(0.0, std::log(ratio));
  }

  double best = 0.0;
  for (const auto& f : body.facets()) {
    const double wx = weight(k, dist_to_hyperplane(x, f.plane));
    const double wy = weight(k, dist_to_hyperplane(y, f.plane));
    best = std::max(best, std::log(wx / wy));
  }
  return best;
}

double finsler_norm(const ConvexBody& body, const TangentVector& xi) {
  require_inside(body, xi.base(), "base point");
  if (body.kind() == BodyKind::Ball) return finsler_norm_along_ray(body, xi);
  const Kind k = body.geometry().kind();
  double best = 0.0;
  for (const auto& f : body.facets()) {
    const double d = dist_to_hyperplane(xi.base(), f.plane);
    const TangentVector toward = eta(xi.base(), f.plane);
    best = std::max(best, weight_log_derivative(k, d) * form(body.geometry(), toward.vec(), xi.vec()));
  }
  return best;
}

double finsler_norm_along_ray(const ConvexBody& body, const TangentVector& xi) {
  require_inside(body, xi.base(), "base point");
  const double len = xi.norm();
  if (len == 0.0) return 0.0;
  const auto hit = ray_exit(body, xi);
  if (!hit) return 0.0;
  return len * weight_log_derivative(body.geometry().kind(), hit->param);
}

std::vector<IndicatrixSample> indicatrix_sample(const ConvexBody& body, const Point& x, int count) {
  if (body.geometry().dim() != 2) throw InputError("indicatrix sampling is two-dimensional");
  if (count < 3) throw InputError("indicatrix sampling needs at least 3 directions");
  require_inside(body, x, "x");
  const auto basis = tangent_basis(x);
  std::vector<IndicatrixSample> out;
  out.reserve(count);
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    const double th = 2.0 * std::numbers::pi * i / count;
    const TangentVector dir(x, std::cos(th) * basis[0] + std::sin(th) * basis[1]);
    const double p = finsler_norm(body, dir);
    if (!(p > 0.0)) {
      out.push_back({th, dir, inf, inf, true});
      continue;
    }
    out.push_back({th, dir.scaled(1.0 / p), std::cos(th) / p, std::sin(th) / p, false});
  }
  return out;
}

double path_length_f3(const ConvexBody& body, const PolyPath& path) {
  if (path.vertices.empty()) throw InputError("path has no vertices");
  if (path.subdivisions < 1) throw InputError("path needs at least one subdivision");
  for (const auto& v : path.vertices) require_inside(body, v, "path vertex");

  double total = 0.0;
  const int m = path.subdivisions;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Point& a = path.vertices[i];
    const Point& b = path.vertices[i + 1];
    const double len = dist(a, b);
    if (len == 0.0) continue;
    const TangentVector dir = unit_tangent(a, b);
    const double h = len / m;
    double sum = 0.0;
    for (int j = 0; j <= m; ++j) {
      const TangentVector vel = exp_velocity(dir, j * h);
      if (!contains(body, vel.base())) throw DomainError("path leaves the body");
      const double f = finsler_norm(body, vel);
      sum += (j == 0 || j == m) ? 0.5 * f : f;
    }
    total += h * sum;
  }
  return total;
}

double hilbert(const ConvexBody& body, const Point& x, const Point& y) {
  if (body.geometry().kind() == Kind::Spherical && !body.flags().hemisphere_ok) {
    throw DomainError("spherical Hilbert metric needs a body inside an open hemisphere");
  }
  return 0.5 * (funk_unchecked(body, x, y) + funk_unchecked(body, y, x));
}

double additivity_defect(const ConvexBody& body, const Point& x, const Point& y, const Point& z) {
  return funk_f1(body, x, y) + funk_f1(body, y, z) - funk_f1(body, x, z);
}

Point Geodesic::at(double t) const { return exp(direction, speed * t); }

double second_difference(const ConvexBody& body, const Point& x, const Geodesic& alpha, double t,
                         double h) {
  const Point lo = alpha.at(t - h);
  const Point mid = alpha.at(t);
  const Point hi = alpha.at(t + h);
  for (const Point* p : {&lo, &mid, &hi}) {
    if (!contains(body, *p)) throw DomainError("geodesic leaves the body");
  }
  return funk_f1(body, x, lo) - 2.0 * funk_f1(body, x, mid) + funk_f1(body, x, hi);
}

ConvexityProbe most_negative_second_difference(const ConvexBody& body, Rng& rng, int restarts,
                                               double h) {
  std::optional<ConvexityProbe> best;
  int done = 0;
  int attempts = 0;
  while (done < restarts && attempts < 50 * restarts) {
    ++attempts;
    const Point x = random_interior_point(rng, body);
    const Point y = random_interior_point(rng, body);
    Geodesic alpha{random_unit_tangent(rng, y), 1.0};
    if (!contains(body, alpha.at(-h)) || !contains(body, alpha.at(h))) continue;
    const double v = second_difference(body, x, alpha, 0.0, h) / (h * h);
    ++done;
    if (!best || v < best->scaled_value) best = ConvexityProbe{v, x, alpha, h};
  }
  if (!best) throw DomainError("no admissible configuration found");
  return *best;
}

// ------------------------------------------------ upper half-plane model

Point halfplane_to_hyperboloid(HalfPlanePoint p) {
  if (!(p.im > 0.0)) throw InputError("half-plane point needs a positive imaginary part");
  using C = std::complex<double>;
  const C z(p.re, p.im);
  const C w = (z - C(0, 1)) / (z + C(0, 1));  // Cayley map to the disc
  const double r2 = std::norm(w);
  Vec x(3);
  x << 2.0 * w.real() / (1.0 - r2), 2.0 * w.imag() / (1.0 - r2), (1.0 + r2) / (1.0 - r2);
  return Point::project(Geometry(Kind::Hyperbolic, 2), x);
}

HalfPlanePoint hyperboloid_to_halfplane(const Point& x) {
  if (x.geometry() != Geometry(Kind::Hyperbolic, 2)) throw InputError("expected a point of H^2");
  using C = std::complex<double>;
  const C w(x[0] / (1.0 + x[2]), x[1] / (1.0 + x[2]));
  const C z = C(0, 1) * (1.0 + w) / (1.0 - w);
  return {z.real(), z.imag()};
}

double halfplane_dist(HalfPlanePoint p, HalfPlanePoint q) {
  const double dx = p.re - q.re;
  const double dy = p.im - q.im;
  // 2 asinh(|p - q| / (2 sqrt(Im p Im q))) is the stable form of arccosh(1 + ...).
  return 2.0 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(p.im * q.im)));
}

ConvexBody ideal_triangle_body() {
  const Point inside = halfplane_to_hyperboloid({0.5, 1.5});
  const auto side = [&](HalfPlanePoint a, HalfPlanePoint b) {
    return orient_toward(line_through(halfplane_to_hyperboloid(a), halfplane_to_hyperboloid(b)),
                         inside);
  };
  const double c = 0.5 * std::numbers::sqrt2 / 2.0;
  std::vector<HalfSpace> facets{
      side({0.0, 1.0}, {0.0, 2.0}),
      side({1.0, 1.0}, {1.0, 2.0}),
      side({0.5, 0.5}, {0.5 + c, c}),
  };
  return ConvexBody::polytope(Geometry(Kind::Hyperbolic, 2), std::move(facets), inside);
}

bool in_ideal_triangle(HalfPlanePoint p) {
  return p.re > 0.0 && p.re < 1.0 && p.im > 0.0 && std::hypot(p.re - 0.5, p.im) > 0.5;
}

double ideal_triangle_slope(HalfPlanePoint p) {
  if (!(p.re > 0.0) || !(p.im > 0.0)) throw InputError("point must lie right of the imaginary axis");
  const double r = std::hypot(p.re, p.im);
  return (r - p.im) / p.re;
}

double ideal_triangle_funk(HalfPlanePoint x1, HalfPlanePoint x2) {
  if (!in_ideal_triangle(x1) || !in_ideal_triangle(x2)) {
    throw DomainError("points must lie inside the ideal triangle");
  }
  if (x1.re == x2.re && x1.im == x2.im) return 0.0;
  static const ConvexBody body = ideal_triangle_body();
  const Point p1 = halfplane_to_hyperboloid(x1);
  const Point p2 = halfplane_to_hyperboloid(x2);
  const auto hit = ray_exit(body, unit_tangent(p1, p2));
  if (!hit || std::find(hit->facet_indices.begin(), hit->facet_indices.end(), 0) ==
                  hit->facet_indices.end()) {
    throw DomainError("the ray from x1 through x2 does not leave through the imaginary axis");
  }
  const double m1 = ideal_triangle_slope(x1);
  const double m2 = ideal_triangle_slope(x2);
  return std::log((1.0 - m2 * m2) / (1.0 - m1 * m1) * m1 / m2);
}

}  // namespace fh

#include "funkhilbert/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "funkhilbert/funk.hpp"
#include "funkhilbert/projective.hpp"

namespace fh {

namespace {

constexpr double kOnLine = 1e-9;
constexpr int kMaxAttempts = 10000;

double w(const Point& p, const Point& q) { return weight(p.geometry().kind(), dist(p, q)); }

void require_on_line(const Point& p, const Point& a, const Point& b, const char* what) {
  if (dist_to_geodesic(a, b, p) > kOnLine) throw InputError(std::string(what) + " is not on its side line");
  if (dist(p, a) <= kOnLine || dist(p, b) <= kOnLine) {
    throw InputError(std::string(what) + " coincides with a vertex");
  }
}

// Unit tangent at x orthogonal to u, in a random direction of the tangent space.
Vec random_orthogonal(Rng& rng, const Point& x, const Vec& u) {
  const auto& g = x.geometry();
  for (;;) {
    Vec v = random_unit_tangent(rng, x).vec();
    v -= form(g, v, u) * u;
    const double n2 = form(g, v, v);
    if (n2 > 1e-4) return v / std::sqrt(n2);
  }
}

TangentVector rotated(const Point& x, const Vec& u, const Vec& u_perp, double angle) {
  return TangentVector(x, std::cos(angle) * u + std::sin(angle) * u_perp);
}

bool well_conditioned(const Triangle& t, const TrigSampling& s) {
  for (double side : {t.a(), t.b(), t.c()}) {
    if (side < s.min_side || side > s.max_side) return false;
  }
  for (double ang : {t.alpha(), t.beta(), t.gamma()}) {
    if (ang < s.min_angle || ang > std::numbers::pi - s.min_angle) return false;
  }
  return true;
}

double line_sine(const TangentVector& a, const TangentVector& b) {
  const double c = form(a.geometry(), a.vec(), b.vec());
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

}  // namespace

Triangle::Triangle(Point a, Point b, Point c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const auto& g = a_.geometry();
  if (!(b_.geometry() == g) || !(c_.geometry() == g)) throw InputError("triangle geometry mismatch");
  sa_ = dist(b_, c_);
  sb_ = dist(c_, a_);
  sc_ = dist(a_, b_);
  if (std::min({sa_, sb_, sc_}) <= 1e-9) throw InputError("triangle has coincident vertices");
  if (g.kind() == Kind::Spherical && !in_open_hemisphere({a_, b_, c_})) {
    throw InputError("spherical triangle is not inside an open hemisphere");
  }
  if (dist_to_geodesic(b_, c_, a_) <= 1e-9) throw InputError("triangle is degenerate (collinear)");
  alpha_ = angle_at(a_, b_, c_);
  beta_ = angle_at(b_, c_, a_);
  gamma_ = angle_at(c_, a_, b_);
}

double sine_rule_residual(const Triangle& t) {
  const Kind k = t.geometry().kind();
  const double ra = weight(k, t.a()) / std::sin(t.alpha());
  const double rb = weight(k, t.b()) / std::sin(t.beta());
  const double rc = weight(k, t.c()) / std::sin(t.gamma());
  const double hi = std::max({ra, rb, rc});
  const double lo = std::min({ra, rb, rc});
  return (hi - lo) / hi;
}

double right_triangle_residual(const Triangle& t) {
  if (std::abs(t.gamma() - std::numbers::pi / 2) > 1e-9) {
    throw InputError("triangle is not right-angled at C");
  }
  const Kind k = t.geometry().kind();
  const double wc = weight(k, t.c());
  return std::abs(weight(k, t.b()) - wc * std::sin(t.beta())) / wc;
}

double cevian_residual(const Triangle& t, const Point& d) {
  require_on_line(d, t.B(), t.C(), "D");
  const double lhs = w(d, t.C()) / w(t.B(), d);
  const double rhs = (std::sin(angle_at(t.A(), d, t.C())) / std::sin(angle_at(t.A(), t.B(), d))) *
                     (std::sin(t.beta()) / std::sin(t.gamma()));
  return std::abs(lhs - rhs) / std::abs(lhs);
}

MenelausPoints menelaus_points(const Triangle& t, const Hyperplane& transversal) {
  return MenelausPoints{
      intersect_lines(transversal, line_through(t.B(), t.C()), t.B()),
      intersect_lines(transversal, line_through(t.C(), t.A()), t.C()),
      intersect_lines(transversal, line_through(t.A(), t.B()), t.A()),
  };
}

double menelaus_product(const Triangle& t, const MenelausPoints& p) {
  require_on_line(p.a1, t.B(), t.C(), "A'");
  require_on_line(p.b1, t.C(), t.A(), "B'");
  require_on_line(p.c1, t.A(), t.B(), "C'");
  return (w(t.A(), p.c1) / w(t.A(), p.b1)) * (w(t.B(), p.a1) / w(t.B(), p.c1)) *
         (w(t.C(), p.b1) / w(p.a1, t.C()));
}

double menelaus_residual(const Triangle& t, const Hyperplane& transversal) {
  return std::abs(menelaus_product(t, menelaus_points(t, transversal)) - 1.0);
}

double menelaus_perturbed_residual(const Triangle& t, const Hyperplane& transversal, double delta) {
  MenelausPoints p = menelaus_points(t, transversal);
  // Slide away from the nearer of A and B so the point stays off the vertices.
  const Point& toward = dist(p.c1, t.A()) > dist(p.c1, t.B()) ? t.A() : t.B();
  p.c1 = exp(unit_tangent(p.c1, toward), delta);
  return std::abs(menelaus_product(t, p) - 1.0);
}

double pencil_trace_cross_ratio(const Pencil& pencil, const Hyperplane& transversal) {
  std::array<Hyperplane, 4> lines{
      line_through(pencil.vertex, exp(pencil.directions[0], 0.5)),
      line_through(pencil.vertex, exp(pencil.directions[1], 0.5)),
      line_through(pencil.vertex, exp(pencil.directions[2], 0.5)),
      line_through(pencil.vertex, exp(pencil.directions[3], 0.5)),
  };
  std::vector<Point> trace;
  for (const auto& l : lines) trace.push_back(intersect_lines(transversal, l, pencil.vertex));
  return cross_ratio_of(trace[0], trace[1], trace[2], trace[3]);
}

double pencil_angle_cross_ratio(const Pencil& p) {
  const auto& d = p.directions;
  return (line_sine(d[1], d[3]) / line_sine(d[2], d[3])) * (line_sine(d[2], d[0]) / line_sine(d[1], d[0]));
}

double pencil_residual(const Pencil& pencil, const Hyperplane& t1, const Hyperplane& t2) {
  const double angle_form = pencil_angle_cross_ratio(pencil);
  const double cr1 = pencil_trace_cross_ratio(pencil, t1);
  const double cr2 = pencil_trace_cross_ratio(pencil, t2);
  return std::max(std::abs(cr1 - angle_form), std::abs(cr1 - cr2)) / angle_form;
}

ChordTriangleWitness chord_triangle_witness(const ConvexBody& body, const Point& x, const Point& y,
                                            const Point& z) {
  if (body.geometry().dim() != 2) throw InputError("the chord construction is two-dimensional");
  const auto exit_point = [&](const Point& p, const Point& q) {
    const auto hit = ray_exit(body, unit_tangent(p, q));
    if (!hit) throw DomainError("ray does not leave the body");
    return hit->point;
  };
  const Point c = exit_point(x, y);
  const Point e = exit_point(y, z);
  const Point b = exit_point(x, z);
  const Point b1 = intersect_lines(line_through(c, e), line_through(x, z), b);
  return ChordTriangleWitness{
      std::log(w(x, b1) / w(z, b1)),
      funk_f1(body, x, y) + funk_f1(body, y, z),
      funk_f1(body, x, z),
  };
}

// ------------------------------------------------------ random instances

TrigSampling default_trig_sampling(const Geometry& g) {
  TrigSampling s;
  if (g.kind() == Kind::Spherical) s.max_side = 1.2;
  return s;
}

Triangle random_triangle(Rng& rng, const Geometry& g, const TrigSampling& s) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Point a = random_base_point(rng, g, 0.5);
    const Vec u = random_unit_tangent(rng, a).vec();
    const Vec up = random_orthogonal(rng, a, u);
    const double ang = rng.uniform(s.min_angle, std::numbers::pi - s.min_angle);
    const Point b = exp(TangentVector(a, u), rng.uniform(s.min_side, s.max_side));
    const Point c = exp(rotated(a, u, up, ang), rng.uniform(s.min_side, s.max_side));
    try {
      Triangle t(a, b, c);
      if (well_conditioned(t, s)) return t;
    } catch (const GeometryError&) {
    }
  }
  throw DomainError("could not sample a well-conditioned triangle");
}

Triangle random_right_triangle(Rng& rng, const Geometry& g, const TrigSampling& s) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Point c = random_base_point(rng, g, 0.5);
    const Vec u = random_unit_tangent(rng, c).vec();
    const Vec up = random_orthogonal(rng, c, u);
    const Point a = exp(TangentVector(c, u), rng.uniform(s.min_side, s.max_side));
    const Point b = exp(TangentVector(c, up), rng.uniform(s.min_side, s.max_side));
    try {
      Triangle t(a, b, c);
      if (well_conditioned(t, s)) return t;
    } catch (const GeometryError&) {
    }
  }
  throw DomainError("could not sample a well-conditioned right triangle");
}

Point random_cevian_foot(Rng& rng, const Triangle& t) {
  const TangentVector dir = unit_tangent(t.B(), t.C());
  const double a = t.a();
  for (;;) {
    const double s = rng.uniform(-0.5 * a, 1.5 * a);
    if (std::abs(s) < 0.1 * a || std::abs(s - a) < 0.1 * a) continue;
    return exp(dir, s);
  }
}

Hyperplane random_transversal(Rng& rng, const Triangle& t) {
  const double far = t.geometry().kind() == Kind::Spherical ? 3.0 : 8.0;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Through interior points of AB and AC; it then meets line BC outside BC.
    const Point p = exp(unit_tangent(t.A(), t.B()), rng.uniform(0.15, 0.85) * t.c());
    const Point q = exp(unit_tangent(t.A(), t.C()), rng.uniform(0.15, 0.85) * t.b());
    const Hyperplane line = line_through(p, q);
    try {
      const MenelausPoints m = menelaus_points(t, line);
      const std::array<const Point*, 3> vertices{&t.A(), &t.B(), &t.C()};
      bool ok = true;
      for (const Point* x : {&m.a1, &m.b1, &m.c1}) {
        for (const Point* v : vertices) {
          const double d = dist(*x, *v);
          if (d < 0.05 || d > far) ok = false;
        }
      }
      if (ok) return line;
    } catch (const GeometryError&) {
    }
  }
  throw DomainError("could not sample a transversal");
}

PencilInstance random_pencil(Rng& rng, const Geometry& g) {
  const double rmax = g.kind() == Kind::Spherical ? 1.0 : 1.5;
  const Point v = random_base_point(rng, g, 0.5);
  const Vec u = random_unit_tangent(rng, v).vec();
  const Vec up = random_orthogonal(rng, v, u);
  double th = 0.0;
  std::array<TangentVector, 4> dirs{rotated(v, u, up, 0.0), rotated(v, u, up, 0.0),
                                    rotated(v, u, up, 0.0), rotated(v, u, up, 0.0)};
  for (int i = 1; i < 4; ++i) {
    th += rng.uniform(0.25, 0.7);
    dirs[i] = rotated(v, u, up, th);
  }
  const auto transversal = [&]() {
    const Point p = exp(dirs[0], rng.uniform(0.3, rmax));
    const Point q = exp(dirs[3], rng.uniform(0.3, rmax));
    return line_through(p, q);
  };
  const Hyperplane t1 = transversal();
  const Hyperplane t2 = transversal();
  return PencilInstance{Pencil{v, dirs}, t1, t2};
}

}  // namespace fh

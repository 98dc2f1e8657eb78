#include "funkhilbert/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fh {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr int kMaxAttempts = 2000;

// Random orthonormal tangent frame at x (Gram-Schmidt under the form).
std::vector<Vec> random_frame(Rng& rng, const Point& x) {
  const auto& g = x.geometry();
  std::vector<Vec> frame;
  while (static_cast<int>(frame.size()) < g.dim()) {
    Vec v = random_unit_tangent(rng, x).vec();
    for (const auto& f : frame) v -= form(g, v, f) * f;
    const double n2 = form(g, v, v);
    if (n2 > 1e-6) frame.push_back(v / std::sqrt(n2));
  }
  return frame;
}

}  // namespace

int Rng::integer(int lo, int hi) {
  return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

double Rng::normal() {
  // Box-Muller; one value per call keeps the stream layout simple.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return splitmix(splitmix(seed ^ h) + index);
}

std::vector<Vec> unit_sphere_spread(int dim, int count) {
  std::vector<Vec> out;
  out.reserve(count);
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double th = 2.0 * std::numbers::pi * (k + 0.5) / count;
      out.push_back(Eigen::Vector2d(std::cos(th), std::sin(th)));
    }
  } else if (dim == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(1.0 - z * z);
      out.push_back(Eigen::Vector3d(r * std::cos(golden * k), r * std::sin(golden * k), z));
    }
  } else {
    Rng rng(0x5eed);
    for (int k = 0; k < count; ++k) {
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = rng.normal();
      out.push_back(v.normalized());
    }
  }
  return out;
}

bool in_open_hemisphere(const std::vector<Point>& points) {
  if (points.empty()) return true;
  const int m = points.front().geometry().ambient_dim();
  std::vector<Vec> candidates;
  Vec sum = Vec::Zero(m);
  for (const auto& p : points) sum += p.coords();
  candidates.push_back(sum);
  for (std::size_t i = 0; i < points.size(); ++i) {
    candidates.push_back(points[i].coords());
  }
  // Midpoints of the extreme pairs along each candidate's weakest point.
  for (std::size_t i = 0; i < points.size() && i < 64; ++i) {
    for (std::size_t j = i + 1; j < points.size() && j < 64; ++j) {
      candidates.push_back(points[i].coords() + points[j].coords());
    }
  }
  for (const auto& c : candidates) {
    if (c.norm() == 0.0) continue;
    const bool ok = std::all_of(points.begin(), points.end(),
                                [&](const Point& p) { return p.coords().dot(c) > 0.0; });
    if (ok) return true;
  }
  return false;
}

TangentVector random_unit_tangent(Rng& rng, const Point& x) {
  const auto basis = tangent_basis(x);
  Vec v = Vec::Zero(x.geometry().ambient_dim());
  double n2 = 0.0;
  while (n2 < 1e-12) {
    v.setZero();
    for (const auto& b : basis) v += rng.normal() * b;
    n2 = form(x.geometry(), v, v);
  }
  return TangentVector(x, v / std::sqrt(n2));
}

Point origin(const Geometry& g) {
  if (!g.curved()) return Point(g, Vec::Zero(g.ambient_dim()));
  return Point(g, Vec::Unit(g.ambient_dim(), g.ambient_dim() - 1));
}

Point random_base_point(Rng& rng, const Geometry& g, double spread) {
  const Point o = origin(g);
  return exp(random_unit_tangent(rng, o), rng.uniform(0.0, spread));
}

ConvexBody random_polytope(Rng& rng, const Point& center, const PolytopeOptions& options) {
  const auto& g = center.geometry();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int k = rng.integer(options.min_facets, options.max_facets);
    const auto basis = tangent_basis(center);
    std::vector<HalfSpace> facets;
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const auto spread = unit_sphere_spread(g.dim(), k);
    const auto frame = random_frame(rng, center);
    for (int i = 0; i < k; ++i) {
      Vec v;
      if (g.dim() == 2) {
        const double jitter = rng.uniform(-0.35, 0.35) * 2.0 * std::numbers::pi / k;
        const double th = phase + 2.0 * std::numbers::pi * i / k + jitter;
        v = std::cos(th) * basis[0] + std::sin(th) * basis[1];
      } else {
        // Spread directions under a random rotation, jittered.
        const Vec& c = spread[i];
        v = Vec::Zero(g.ambient_dim());
        for (int j = 0; j < g.dim(); ++j) v += c[j] * frame[j];
        v += 0.2 * random_unit_tangent(rng, center).vec();
      }
      const double d = rng.uniform(options.min_facet_distance, options.max_facet_distance);
      facets.push_back(facet_at(TangentVector(center, v).normalized(), d));
    }
    try {
      ConvexBody body = ConvexBody::polytope(g, facets, center);
      if (options.require_bounded && !body.flags().bounded) continue;
      if (g.kind() == Kind::Spherical && !body.flags().funk_diameter_ok) continue;
      return body;
    } catch (const InputError&) {
      continue;
    }
  }
  throw DomainError("could not generate a random polytope with the requested options");
}

ConvexBody random_ball(Rng& rng, const Point& center, double min_radius, double max_radius) {
  return ConvexBody::ball(center, rng.uniform(min_radius, max_radius));
}

Point random_interior_point(Rng& rng, const ConvexBody& body, double max_fraction) {
  const TangentVector dir = random_unit_tangent(rng, body.interior_witness());
  const auto hit = ray_exit(body, dir);
  const double reach = hit ? hit->param : 2.0;
  return exp(dir, rng.uniform(0.0, max_fraction) * reach);
}

PolytopeOptions default_polytope_options(const Geometry& g) {
  PolytopeOptions o;
  o.min_facets = std::max(3, g.dim() + 1);
  o.max_facets = 8;
  // Few facets in higher dimension give long, thin cells; spherical bodies
  // must stay below diameter pi/2.
  if (g.kind() == Kind::Spherical && g.dim() >= 3) o.min_facets = 6;
  switch (g.kind()) {
    case Kind::Euclidean:
      o.min_facet_distance = 0.3;
      o.max_facet_distance = 1.2;
      break;
    case Kind::Spherical:
      o.min_facet_distance = 0.12;
      o.max_facet_distance = 0.3;
      break;
    case Kind::Hyperbolic:
      o.min_facet_distance = 0.3;
      o.max_facet_distance = 1.2;
      break;
  }
  return o;
}

ConvexBody random_body(Rng& rng, const Geometry& g) {
  const Point center = random_base_point(rng, g, g.kind() == Kind::Spherical ? 1.0 : 0.8);
  if (rng.uniform() < 0.5) {
    const double hi = g.kind() == Kind::Spherical ? 0.7 : 1.5;
    return random_ball(rng, center, 0.3, hi);
  }
  return random_polytope(rng, center, default_polytope_options(g));
}

}  // namespace fh

#pragma once

// Deterministic random sampling of points, directions and bodies. Every
// stream is derived from (seed, stream id, index) so parallel sweeps give
// the same results regardless of worker count.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "funkhilbert/bodies.hpp"

namespace fh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), built from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi);  // inclusive
  double normal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

/// Deterministic, roughly uniform unit vectors in R^dim.
std::vector<Vec> unit_sphere_spread(int dim, int count);

/// True when some open hemisphere contains every point.
bool in_open_hemisphere(const std::vector<Point>& points);

TangentVector random_unit_tangent(Rng& rng, const Point& x);

/// Reference point of the model: origin, north pole or hyperboloid vertex.
Point origin(const Geometry& g);

/// A random base point: within distance `spread` of the origin.
Point random_base_point(Rng& rng, const Geometry& g, double spread);

struct PolytopeOptions {
  int min_facets = 3;
  int max_facets = 8;
  double min_facet_distance = 0.3;
  double max_facet_distance = 1.2;
  bool require_bounded = true;
};

/// Polytope around `center` with facets at random distances from it.
/// Spherical results always satisfy the Funk diameter condition.
ConvexBody random_polytope(Rng& rng, const Point& center, const PolytopeOptions& options);

ConvexBody random_ball(Rng& rng, const Point& center, double min_radius, double max_radius);

/// A point strictly inside: a random fraction (at most `max_fraction`) of
/// the way from the witness to the boundary along a random ray.
Point random_interior_point(Rng& rng, const ConvexBody& body, double max_fraction = 0.9);

/// Sensible random polytope options for a geometry.
PolytopeOptions default_polytope_options(const Geometry& g);

/// Random polytope or ball in the given geometry (mixed 50/50).
ConvexBody random_body(Rng& rng, const Geometry& g);

}  // namespace fh

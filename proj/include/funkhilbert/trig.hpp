#pragma once

// Triangle identities shared by the three geometries, written with
// w = id / sin / sinh. Each operation returns a residual that vanishes
// when the identity holds.

#include <array>

#include "funkhilbert/bodies.hpp"
#include "funkhilbert/sampling.hpp"

namespace fh {

class Triangle {
 public:
  /// Checks distinct, non-collinear vertices (and a hemisphere on S^n).
  Triangle(Point a, Point b, Point c);

  const Point& A() const { return a_; }
  const Point& B() const { return b_; }
  const Point& C() const { return c_; }
  const Geometry& geometry() const { return a_.geometry(); }

  /// Side lengths opposite A, B, C.
  double a() const { return sa_; }
  double b() const { return sb_; }
  double c() const { return sc_; }
  /// Interior angles at A, B, C.
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

 private:
  Point a_, b_, c_;
  double sa_, sb_, sc_;
  double alpha_, beta_, gamma_;
};

/// Largest relative spread of w(a)/sin A, w(b)/sin B, w(c)/sin C.
double sine_rule_residual(const Triangle& t);

/// |w(b) - w(c) sin B| / w(c) for a triangle with a right angle at C.
double right_triangle_residual(const Triangle& t);

/// D on the line BC: w(DC)/w(BD) against
/// (sin DAC / sin BAD) (sin B / sin C), relative.
double cevian_residual(const Triangle& t, const Point& d);

struct MenelausPoints {
  Point a1;  ///< on line BC
  Point b1;  ///< on line CA
  Point c1;  ///< on line AB
};

/// Traces of a geodesic line (dim 2) on the three side lines.
MenelausPoints menelaus_points(const Triangle& t, const Hyperplane& transversal);

/// (w(AC')/w(AB')) (w(BA')/w(BC')) (w(CB')/w(A'C)) for points on the side
/// lines, each distinct from the vertices.
double menelaus_product(const Triangle& t, const MenelausPoints& p);

/// |product - 1| for the traces of the transversal.
double menelaus_residual(const Triangle& t, const Hyperplane& transversal);

/// Same, after sliding C' along the line AB by `delta` (off the transversal).
double menelaus_perturbed_residual(const Triangle& t, const Hyperplane& transversal, double delta);

/// Four geodesic lines through `vertex` (given by unit directions) cut by
/// two transversals.
struct Pencil {
  Point vertex;
  std::array<TangentVector, 4> directions;
};

/// Cross ratio of the trace of the pencil on a transversal.
double pencil_trace_cross_ratio(const Pencil& pencil, const Hyperplane& transversal);

/// (sin L2L4 / sin L3L4) (sin L3L1 / sin L2L1) for the pencil's lines.
double pencil_angle_cross_ratio(const Pencil& pencil);

/// max(|CR1 - angle form|, |CR1 - CR2|) / angle form.
double pencil_residual(const Pencil& pencil, const Hyperplane& t1, const Hyperplane& t2);

/// Chord construction behind the Menelaus route to the triangle
/// inequality. With c = b(x,y), e = b(y,z) and b' the meeting point of the
/// lines ce and xz, Menelaus on xyz gives
///   log(w(xb') / w(zb')) = F(x,y) + F(y,z),
/// while b' lies on the chord ce, hence no farther from x than b(x,z).
struct ChordTriangleWitness {
  double menelaus_log;  ///< log(w(xb') / w(zb'))
  double funk_sum;      ///< F(x,y) + F(y,z)
  double funk_direct;   ///< F(x,z)
};

ChordTriangleWitness chord_triangle_witness(const ConvexBody& body, const Point& x, const Point& y,
                                            const Point& z);

// ------------------------------------------------------ random instances

struct TrigSampling {
  double min_side = 0.1;
  double max_side = 3.0;  ///< 1.2 on the sphere
  double min_angle = 0.25;
};

TrigSampling default_trig_sampling(const Geometry& g);

/// Random well-conditioned triangle (dim 2).
Triangle random_triangle(Rng& rng, const Geometry& g, const TrigSampling& s);
/// Random right triangle with the right angle at C.
Triangle random_right_triangle(Rng& rng, const Geometry& g, const TrigSampling& s);
/// Random point on the line BC, off B and C; may lie outside the segment.
Point random_cevian_foot(Rng& rng, const Triangle& t);
/// Random transversal meeting all three side lines away from the vertices.
Hyperplane random_transversal(Rng& rng, const Triangle& t);
/// Random pencil with two transversals meeting all four lines.
struct PencilInstance {
  Pencil pencil;
  Hyperplane t1;
  Hyperplane t2;
};
PencilInstance random_pencil(Rng& rng, const Geometry& g);

}  // namespace fh

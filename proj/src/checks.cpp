#include "funkhilbert/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "funkhilbert/funk.hpp"
#include "funkhilbert/projective.hpp"
#include "funkhilbert/trig.hpp"

namespace fh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Spec {
  std::string name;
  bool take_max;
  Compare compare;
  double threshold;
  bool scaled = true;
};

Spec at_most(std::string name, double tol) { return {std::move(name), true, Compare::AtMost, tol}; }
Spec at_least(std::string name, double bound, bool scaled = true) {
  return {std::move(name), false, Compare::AtLeast, bound, scaled};
}
Spec below(std::string name, double bound) { return {std::move(name), false, Compare::Below, bound, false}; }
Spec above(std::string name, double bound) { return {std::move(name), false, Compare::Above, bound, false}; }

using Row = std::vector<double>;

struct SampleOutcome {
  Row row;
  std::string error;
};

// Runs sample(i) for i in [0, n) on `jobs` workers; outcomes are stored by
// index, so the reduction below sees the same order for any worker count.
std::vector<SampleOutcome> run_indexed(int n, int jobs, std::size_t width,
                                       const std::function<Row(int)>& sample) {
  std::vector<SampleOutcome> out(n);
  std::atomic<int> next{0};
  const auto worker = [&]() {
    for (int i = next++; i < n; i = next++) {
      try {
        out[i].row = sample(i);
      } catch (const std::exception& e) {
        out[i].row.assign(width, kNaN);
        out[i].error = e.what();
      }
    }
  };
  const int workers = std::max(1, std::min(jobs, n));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

bool evaluate(Compare c, double value, double threshold) {
  switch (c) {
    case Compare::AtMost: return value <= threshold;
    case Compare::AtLeast: return value >= threshold;
    case Compare::Below: return value < threshold;
    case Compare::Above: return value > threshold;
  }
  return false;
}

void sweep(std::vector<CheckResult>& report, const CheckOptions& opt, const std::string& prefix,
           const std::vector<Spec>& specs, int n, const std::function<Row(int)>& sample) {
  const auto outcomes = run_indexed(n, opt.jobs, specs.size(), sample);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const Spec& s = specs[k];
    CheckResult r;
    r.name = prefix + "." + s.name;
    r.compare = s.compare;
    r.threshold = s.scaled ? s.threshold * opt.tol_scale : s.threshold;
    r.value = s.take_max ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
    for (const auto& o : outcomes) {
      if (!o.error.empty()) {
        if (r.errors++ == 0) r.first_error = o.error;
        continue;
      }
      const double v = o.row[k];
      if (std::isnan(v)) continue;
      ++r.samples;
      r.value = s.take_max ? std::max(r.value, v) : std::min(r.value, v);
    }
    if (r.samples == 0) r.value = kNaN;
    r.pass = r.errors == 0 && r.samples > 0 && evaluate(r.compare, r.value, r.threshold);
    report.push_back(std::move(r));
  }
}

std::string label(const Geometry& g) {
  return "[" + std::string(to_string(g.kind())) + ",n=" + std::to_string(g.dim()) + "]";
}

Rng stream(const CheckOptions& opt, const std::string& name, int i) {
  return Rng(derive_seed(opt.seed, name, static_cast<std::uint64_t>(i)));
}

const char* compare_symbol(Compare c) {
  switch (c) {
    case Compare::AtMost: return "<=";
    case Compare::AtLeast: return ">=";
    case Compare::Below: return "<";
    case Compare::Above: return ">";
  }
  return "?";
}

std::string number(double v) {
  if (std::isnan(v)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

// ------------------------------------------------------------------ funk

void funk_suite(std::vector<CheckResult>& report, const CheckOptions& opt) {
  const std::vector<Spec> specs{
      at_most("f1_eq_f2", 1e-9),
      at_most("identity", 0.0),
      at_least("triangle_defect_min", -1e-12),
      at_most("collinear_defect", 1e-9),
      at_most("shared_facet_defect", 1e-9),
      above("ball_defect_min", 0.0),
      at_most("ray_monotone", 1e-12),
      at_most("hilbert_symmetry", 1e-12),
      at_most("hilbert_collinear", 1e-9),
      at_most("norm_directional_derivative", 1e-3),
      at_most("f3_vs_f1_2^14", 1e-6),
      at_least("f3_order", 1.9, false),
      at_most("indicatrix_midpoint", 1e-10),
  };
  // The indicatrix is sampled in the plane only.
  const std::vector<Spec> specs3(specs.begin(), specs.end() - 1);
  for (Kind kind : {Kind::Euclidean, Kind::Spherical, Kind::Hyperbolic}) {
    for (int dim : {2, 3}) {
      const Geometry g(kind, dim);
      const std::string name = "funk" + label(g);
      sweep(report, opt, name, dim == 2 ? specs : specs3, opt.samples, [&](int i) {
        Row v(specs.size(), kNaN);
        Rng rng = stream(opt, name, i);
        const ConvexBody body = random_body(rng, g);
        const Point x = random_interior_point(rng, body);
        const Point y = random_interior_point(rng, body);
        const Point z = random_interior_point(rng, body);
        v[0] = std::abs(funk_f1(body, x, y) - funk_f2(body, x, y));
        v[1] = std::abs(funk_f1(body, x, x));
        const double defect = additivity_defect(body, x, y, z);
        v[2] = defect;

        const TripleSample c = collinear_triple(rng, body);
        v[3] = std::abs(additivity_defect(body, c.x, c.y, c.z));
        if (body.kind() == BodyKind::Polytope) {
          const TripleSample s = shared_facet_triple(rng, body);
          v[4] = std::abs(additivity_defect(body, s.x, s.y, s.z));
        } else {
          v[5] = defect;
        }

        // F(x, x_t) along [x, b) never decreases.
        const TangentVector xi = unit_tangent(x, y);
        const auto hit = ray_exit(body, xi);
        const double reach = hit ? hit->param : 3.0;
        double prev = 0.0, worst = 0.0;
        for (double f : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
          const double cur = funk_f1(body, x, exp(xi, f * reach));
          worst = std::max(worst, prev - cur);
          prev = cur;
        }
        v[6] = worst;

        v[7] = std::abs(hilbert(body, x, y) - hilbert(body, y, x));
        v[8] = std::abs(hilbert(body, c.x, c.y) + hilbert(body, c.y, c.z) - hilbert(body, c.x, c.z));

        const TangentVector dir = random_unit_tangent(rng, x);
        const double p = finsler_norm(body, dir);
        if (p > 0.0) {
          const double h = 1e-5;
          v[9] = std::abs(funk_f1(body, x, exp(dir, h)) / h - p) / p;
        }
        if (i % 50 == 0) {
          const double f1 = funk_f1(body, x, y);
          v[10] = std::abs(path_length_f3(body, PolyPath{{x, y}, 1 << 14}) - f1);
          v[11] = f3_refinement_order(body, x, y, 32);
        }
        if (dim == 2) {
          if (i % 10 == 0) v[12] = indicatrix_midpoint_max(body, x, 64) - 1.0;
        } else {
          v.pop_back();
        }
        return v;
      });
    }
  }

  // Closed radial forms about a ball center.
  const std::vector<Spec> radial{
      at_most("radial_closed_form", 1e-12),
      at_most("center_norm_closed_form", 1e-12),
  };
  for (Kind kind : {Kind::Euclidean, Kind::Spherical, Kind::Hyperbolic}) {
    const Geometry g(kind, 2);
    const std::string name = "funk" + label(g);
    sweep(report, opt, name, radial, std::min(opt.samples, 100), [&](int i) {
      Rng rng = stream(opt, name + "radial", i);
      const Point c = random_base_point(rng, g, 0.5);
      const double r = kind == Kind::Euclidean ? 1.0 : rng.uniform(0.2, kind == Kind::Spherical ? 0.7 : 1.5);
      const ConvexBody ball = ConvexBody::ball(c, r);
      const double d = rng.uniform(0.0, 0.95) * r;
      const TangentVector xi = random_unit_tangent(rng, c);
      const double expected = std::log(weight(kind, r) / weight(kind, r - d));
      const double len = rng.uniform(0.1, 2.0);
      const double norm_expected = len * weight_log_derivative(kind, r);
      return Row{std::abs(funk_f1(ball, c, exp(xi, d)) - expected),
                 std::abs(finsler_norm(ball, xi.scaled(len)) - norm_expected)};
    });
  }
}

// ------------------------------------------------------------ projective

void projective_suite(std::vector<CheckResult>& report, const CheckOptions& opt) {
  const std::vector<Spec> specs{
      at_most("chord_identity", 1e-12),
      at_most("chord_identity_central_chords", 1e-12),
      at_most("cross_ratio_preserved", 1e-10),
      at_most("hilbert_isometry", 1e-9),
      at_most("lift_membership_mismatches", 0.0),
  };
  for (Kind target : {Kind::Spherical, Kind::Hyperbolic}) {
    for (int dim : {2, 3}) {
      const std::string name = "projective[" + std::string(to_string(target)) + ",n=" + std::to_string(dim) + "]";
      sweep(report, opt, name, specs, opt.samples, [&](int i) {
        Rng rng = stream(opt, name, i);
        const Geometry e(Kind::Euclidean, dim);
        const ConvexBody body = random_chart_polytope(rng, dim);
        const Point u = random_interior_point(rng, body);
        const Point v = random_interior_point(rng, body);
        const Point through = Point(e, -rng.uniform(0.2, 1.0) * u.coords());

        double a = rng.uniform(0.1, 0.9), b = rng.uniform(0.1, 0.9);
        if (a > b) std::swap(a, b);
        const Vec d = v.coords() - u.coords();
        const std::array<Point, 4> quad{u, Point(e, u.coords() + a * d), Point(e, u.coords() + b * d), v};
        const PerspectivityReport rep = perspectivity_checks(body, u, v, quad, target);

        const ConvexBody lifted = lift_body(body, target);
        int mismatches = 0;
        for (int k = 0; k < 16; ++k) {
          Vec w(dim);
          for (int j = 0; j < dim; ++j) w[j] = rng.uniform(-1.0, 1.0);
          if (target == Kind::Hyperbolic && w.norm() >= 0.999) continue;
          const Point cp(e, w);
          if (std::abs(boundary_margin(body, cp)) < 1e-9) continue;
          if (contains(body, cp) != contains(lifted, lift_point(cp, target))) ++mismatches;
        }
        return Row{rep.chord, chord_residual_literal(u, through, target), rep.cross_ratio, rep.hilbert,
                   static_cast<double>(mismatches)};
      });
    }
  }

  const std::vector<Spec> pencil{at_most("pencil_invariance", 1e-10)};
  for (Kind kind : {Kind::Euclidean, Kind::Spherical, Kind::Hyperbolic}) {
    const Geometry g(kind, 2);
    const std::string name = "projective" + label(g);
    sweep(report, opt, name, pencil, opt.samples, [&](int i) {
      Rng rng = stream(opt, name + "pencil", i);
      const PencilInstance p = random_pencil(rng, g);
      return Row{pencil_residual(p.pencil, p.t1, p.t2)};
    });
  }

  // Generalized Beltrami-Klein: lifted discs D_R keep their Hilbert metric.
  const std::vector<Spec> klein{
      at_most("beltrami_klein_disc", 1e-9),
      at_most("unit_disc_radial", 1e-12),
  };
  for (Kind target : {Kind::Spherical, Kind::Hyperbolic}) {
    const std::string name = "projective[" + std::string(to_string(target)) + ",klein]";
    sweep(report, opt, name, klein, opt.samples, [&](int i) {
      Rng rng = stream(opt, name, i);
      const Geometry e(Kind::Euclidean, 2);
      const double radii[] = {0.3, 0.6, 0.9};
      const ConvexBody disc = ConvexBody::ball(origin(e), radii[i % 3]);
      const ConvexBody lifted = lift_body(disc, target);
      const Point u = random_interior_point(rng, disc, 0.99);
      const Point v = random_interior_point(rng, disc, 0.99);
      const double iso = std::abs(hilbert(lifted, lift_point(u, target), lift_point(v, target)) -
                                  hilbert(disc, u, v));
      const ConvexBody unit = ConvexBody::ball(origin(e), 1.0);
      const double r = rng.uniform(0.0, 0.99);
      const Point y(e, Eigen::Vector2d(r, 0.0));
      const double expected = 0.5 * std::log((1.0 + r) / (1.0 - r));
      double radial = std::abs(hilbert(unit, origin(e), y) - expected);
      if (target == Kind::Hyperbolic) {
        radial = std::max(radial, std::abs(dist(origin(Geometry(target, 2)), lift_point(y, target)) - expected));
      }
      return Row{iso, radial};
    });
  }
}

// ------------------------------------------------------------------ trig

void trig_suite(std::vector<CheckResult>& report, const CheckOptions& opt) {
  const std::vector<Spec> specs{
      at_most("sine_rule", 1e-10),
      at_most("right_triangle", 1e-10),
      at_most("cevian", 1e-10),
      at_most("menelaus", 1e-10),
      above("menelaus_converse_min", 1e-6),
      at_most("pencil", 1e-10),
      at_most("chord_menelaus_identity", 1e-9),
      at_least("chord_triangle_inequality_min", -1e-12),
  };
  for (Kind kind : {Kind::Euclidean, Kind::Spherical, Kind::Hyperbolic}) {
    const Geometry g(kind, 2);
    const std::string name = "trig" + label(g);
    const TrigSampling ts = default_trig_sampling(g);
    sweep(report, opt, name, specs, opt.samples, [&](int i) {
      Rng rng = stream(opt, name, i);
      const Triangle t = random_triangle(rng, g, ts);
      const Triangle rt = random_right_triangle(rng, g, ts);
      const Hyperplane line = random_transversal(rng, t);
      const PencilInstance p = random_pencil(rng, g);
      const ConvexBody body = random_body(rng, g);
      const ChordTriangleWitness cw = chord_triangle_witness(
          body, random_interior_point(rng, body), random_interior_point(rng, body),
          random_interior_point(rng, body));
      return Row{sine_rule_residual(t),
                 right_triangle_residual(rt),
                 cevian_residual(t, random_cevian_foot(rng, t)),
                 menelaus_residual(t, line),
                 menelaus_perturbed_residual(t, line, 1e-3),
                 pencil_residual(p.pencil, p.t1, p.t2),
                 std::abs(cw.menelaus_log - cw.funk_sum),
                 cw.menelaus_log - cw.funk_direct};
    });
  }
}

// ------------------------------------------------------------- convexity

void convexity_suite(std::vector<CheckResult>& report, const CheckOptions& opt) {
  const std::vector<Spec> specs{at_least("scaled_second_difference_min", -1e-8)};
  for (Kind kind : {Kind::Euclidean, Kind::Spherical}) {
    const std::string name = "convexity[" + std::string(to_string(kind)) + "]";
    sweep(report, opt, name, specs, opt.samples, [&](int i) {
      Rng rng = stream(opt, name, i);
      const Geometry g(kind, 2 + i % 2);
      const ConvexBody body = random_body(rng, g);
      const Point x = random_interior_point(rng, body);
      for (;;) {
        const Point y = random_interior_point(rng, body);
        const Geodesic alpha{random_unit_tangent(rng, y), 1.0};
        const double h = rng.uniform(0.01, 0.1);
        if (!contains(body, alpha.at(-h)) || !contains(body, alpha.at(h))) continue;
        return Row{second_difference(body, x, alpha, 0.0, h) / (h * h)};
      }
    });
  }

  const std::vector<Spec> witness{below("witness_scaled_second_difference", -1e-6)};
  const std::string name = "convexity[hyperbolic]";
  sweep(report, opt, name, witness, 1, [&](int i) {
    Rng rng = stream(opt, name, i);
    const Geometry g(Kind::Hyperbolic, 2);
    const ConvexBody body = random_polytope(rng, origin(g), default_polytope_options(g));
    return Row{most_negative_second_difference(body, rng, 200, 0.05).scaled_value};
  });
}

}  // namespace

// -------------------------------------------------------------- reports

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string RunReport::format() const {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "check %s  seed=%llu  samples=%d  tol-scale=%g\n", suite.c_str(),
                static_cast<unsigned long long>(options.seed), options.samples, options.tol_scale);
  out += buf;
  int passed_count = 0;
  for (const auto& c : checks) {
    passed_count += c.pass;
    std::snprintf(buf, sizeof buf, "%s  %-58s %s %s %s  (n=%d)\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), number(c.value).c_str(), compare_symbol(c.compare),
                  number(c.threshold).c_str(), c.samples);
    out += buf;
    if (c.errors > 0) {
      std::snprintf(buf, sizeof buf, "      %d sample(s) raised: %s\n", c.errors, c.first_error.c_str());
      out += buf;
    }
  }
  std::snprintf(buf, sizeof buf, "result: %s (%d/%zu checks passed)\n", passed() ? "PASS" : "FAIL",
                passed_count, checks.size());
  out += buf;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"funk", "projective", "trig", "convexity", "all"};
  return names;
}

RunReport run_check(const std::string& suite, const CheckOptions& options) {
  if (options.samples < 1) throw InputError("--samples must be positive");
  if (options.jobs < 1) throw InputError("--jobs must be positive");
  if (!(options.tol_scale > 0.0)) throw InputError("--tol must be positive");
  RunReport report{suite, options, {}};
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw InputError("unknown check suite '" + suite + "'");
  }
  if (all || suite == "funk") funk_suite(report.checks, options);
  if (all || suite == "projective") projective_suite(report.checks, options);
  if (all || suite == "trig") trig_suite(report.checks, options);
  if (all || suite == "convexity") convexity_suite(report.checks, options);
  return report;
}

// ----------------------------------------------- shared test constructions

TripleSample collinear_triple(Rng& rng, const ConvexBody& body) {
  const Point x = random_interior_point(rng, body);
  const TangentVector xi = random_unit_tangent(rng, x);
  const auto hit = ray_exit(body, xi);
  const double reach = hit ? hit->param : 3.0;
  const double a = rng.uniform(0.05, 0.45);
  const double b = rng.uniform(a + 0.05, 0.9);
  return TripleSample{x, exp(xi, a * reach), exp(xi, b * reach)};
}

TripleSample shared_facet_triple(Rng& rng, const ConvexBody& body) {
  if (body.kind() != BodyKind::Polytope) throw InputError("shared-facet triples need a polytope");
  const auto& g = body.geometry();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point x = random_interior_point(rng, body);
    const TangentVector xi = random_unit_tangent(rng, x);
    const auto hit = ray_exit(body, xi);
    if (!hit || hit->facet_indices.size() != 1) continue;
    const int k = hit->facet_indices[0];
    const Point y = exp(xi, rng.uniform(0.2, 0.8) * hit->param);

    // Slide along facet k from the first hit point.
    const Point& b1 = hit->point;
    const Vec n = project_to_tangent(b1, body.facets()[k].plane.normal());
    Vec v = random_unit_tangent(rng, b1).vec();
    v -= form(g, v, n) / form(g, n, n) * n;
    const double vn = std::sqrt(std::max(0.0, form(g, v, v)));
    if (vn < 1e-3) continue;
    const Point b2 = exp(TangentVector(b1, v / vn), rng.uniform(0.02, 0.3) * hit->param);
    bool on_facet_only = true;
    for (std::size_t j = 0; j < body.facets().size(); ++j) {
      if (static_cast<int>(j) != k && !(body.facets()[j].value(b2) > 1e-6)) on_facet_only = false;
    }
    if (!on_facet_only) continue;
    const TangentVector to_b2 = unit_tangent(y, b2);
    const Point z = exp(to_b2, rng.uniform(0.2, 0.8) * dist(y, b2));
    if (dist_to_geodesic(x, y, z) < 1e-3) continue;
    return TripleSample{x, y, z};
  }
  throw DomainError("could not construct a shared-facet triple");
}

ConvexBody random_chart_polytope(Rng& rng, int dim) {
  const Geometry e(Kind::Euclidean, dim);
  PolytopeOptions o;
  o.min_facets = dim == 2 ? 5 : 8;
  o.max_facets = dim == 2 ? 8 : 10;
  o.min_facet_distance = 0.15;
  o.max_facet_distance = 0.45;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ConvexBody body = random_polytope(rng, origin(e), o);
    try {
      lift_body(body, Kind::Hyperbolic);
      return body;
    } catch (const InputError&) {
    }
  }
  throw DomainError("could not sample a chart polytope inside the unit ball");
}

double indicatrix_midpoint_max(const ConvexBody& body, const Point& x, int count) {
  const auto samples = indicatrix_sample(body, x, count);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    const auto& a = samples[i];
    const auto& b = samples[(i + 1) % count];
    if (a.unbounded || b.unbounded) continue;
    const TangentVector mid(x, 0.5 * (a.vec.vec() + b.vec.vec()));
    worst = std::max(worst, finsler_norm(body, mid));
  }
  return worst;
}

double f3_refinement_order(const ConvexBody& body, const Point& x, const Point& y, int m) {
  const double f1 = funk_f1(body, x, y);
  const double e1 = std::abs(path_length_f3(body, PolyPath{{x, y}, m}) - f1);
  const double e2 = std::abs(path_length_f3(body, PolyPath{{x, y}, 2 * m}) - f1);
  if (e2 == 0.0) return std::numeric_limits<double>::infinity();
  return std::log2(e1 / e2);
}

}  // namespace fh

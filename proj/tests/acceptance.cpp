// Acceptance run: one PASS/FAIL line per criterion, with indented detail
// lines for the quantities behind each verdict. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "funkhilbert/checks.hpp"
#include "funkhilbert/funk.hpp"
#include "funkhilbert/projective.hpp"
#include "funkhilbert/trig.hpp"

#ifndef FHGEO_PATH
#define FHGEO_PATH "fhgeo"
#endif

using namespace fh;

namespace {

constexpr std::uint64_t kSeed = 42;
const Kind kKinds[] = {Kind::Euclidean, Kind::Spherical, Kind::Hyperbolic};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rng rng_for(const std::string& stream, int i) {
  return Rng(derive_seed(kSeed, stream, static_cast<std::uint64_t>(i)));
}

struct Max {
  double value = 0.0;
  void add(double v) { value = std::isnan(v) ? std::numeric_limits<double>::infinity() : std::max(value, v); }
};

struct Min {
  double value = std::numeric_limits<double>::infinity();
  void add(double v) { value = std::isnan(v) ? -std::numeric_limits<double>::infinity() : std::min(value, v); }
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[1024];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

int failures = 0;

void verdict(const std::string& id, bool pass, const std::string& text) {
  std::printf("%s  %-4s %s\n", pass ? "PASS" : "FAIL", id.c_str(), text.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void detail(bool pass, const std::string& text) {
  std::printf("      %s  %s\n", pass ? "ok " : "bad", text.c_str());
}

void info(const std::string& text) { std::printf("      info %s\n", text.c_str()); }

// Runs `body` and reports an exception as a failed criterion.
void criterion(const std::string& id, const std::string& title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(id, false, title + ": error: " + e.what());
  }
}

// ------------------------------------------------------------------- C1

void c1() {
  criterion("C1", "three formulations", [] {
    const auto t0 = Clock::now();
    Max f12, f31;
    Min order;
    int n = 0;
    for (Kind k : kKinds) {
      for (int i = 0; i < 100; ++i) {
        Rng rng = rng_for("c1." + std::string(to_string(k)), i);
        const Geometry g(k, 2 + i % 2);
        const ConvexBody body = random_body(rng, g);
        const Point x = random_interior_point(rng, body);
        const Point y = random_interior_point(rng, body);
        const double f1 = funk_f1(body, x, y);
        f12.add(std::abs(f1 - funk_f2(body, x, y)));
        f31.add(std::abs(path_length_f3(body, PolyPath{{x, y}, 1 << 14}) - f1));
        order.add(f3_refinement_order(body, x, y, 32));
        ++n;
      }
    }
    const double secs = seconds_since(t0);
    const bool ok = f12.value <= 1e-9 && f31.value <= 1e-6 && order.value >= 1.9 && secs <= 30.0;
    verdict("C1", ok,
            fmt("three formulations (%d instances): max|F1-F2|=%.2e max|F3-F1|=%.2e min order=%.3f time=%.1fs",
                n, f12.value, f31.value, order.value, secs));
  });
}

// ------------------------------------------------------------------- C2

void c2() {
  criterion("C2", "weak-metric axioms", [] {
    Max identity, collinear, shared;
    Min triangle, ball;
    for (Kind k : kKinds) {
      for (int i = 0; i < 1000; ++i) {
        Rng rng = rng_for("c2." + std::string(to_string(k)), i);
        const Geometry g(k, 2 + i % 2);
        const ConvexBody body = random_body(rng, g);
        const Point x = random_interior_point(rng, body);
        const Point y = random_interior_point(rng, body);
        const Point z = random_interior_point(rng, body);
        identity.add(std::abs(funk_f1(body, x, x)));
        const double defect = additivity_defect(body, x, y, z);
        triangle.add(defect);
        const TripleSample c = collinear_triple(rng, body);
        collinear.add(std::abs(additivity_defect(body, c.x, c.y, c.z)));
        if (body.kind() == BodyKind::Polytope) {
          const TripleSample s = shared_facet_triple(rng, body);
          shared.add(std::abs(additivity_defect(body, s.x, s.y, s.z)));
        } else if (dist_to_geodesic(x, y, z) > 1e-6) {
          ball.add(defect);
        }
      }
    }
    const bool ok = identity.value == 0.0 && triangle.value >= -1e-12 && collinear.value <= 1e-9 &&
                    shared.value <= 1e-9 && ball.value > 0.0;
    verdict("C2", ok,
            fmt("weak-metric axioms (3000 triples): F(x,x)=%.1e min defect=%.2e collinear=%.2e shared-facet=%.2e "
                "ball min defect=%.2e",
                identity.value, triangle.value, collinear.value, shared.value, ball.value));
  });
}

// ------------------------------------------------------------------- C3

void c3() {
  criterion("C3", "radial closed forms", [] {
    std::array<Max, 3> err;
    for (int k = 0; k < 3; ++k) {
      const Kind kind = kKinds[k];
      for (int i = 0; i < 100; ++i) {
        Rng rng = rng_for("c3." + std::string(to_string(kind)), i);
        const Geometry g(kind, 2 + i % 2);
        const Point c = kind == Kind::Euclidean ? origin(g) : random_base_point(rng, g, 0.5);
        const double R = kind == Kind::Euclidean ? 1.0 : rng.uniform(0.2, kind == Kind::Spherical ? 0.75 : 2.0);
        const double d = rng.uniform(0.0, 0.95) * R;
        const Point y = exp(random_unit_tangent(rng, c), d);
        double expected = 0.0;
        switch (kind) {
          case Kind::Euclidean: expected = -std::log(1.0 - y.coords().norm()); break;
          case Kind::Spherical: expected = std::log(std::sin(R) / std::sin(R - d)); break;
          case Kind::Hyperbolic: expected = std::log(std::sinh(R) / std::sinh(R - d)); break;
        }
        err[k].add(std::abs(funk_f1(ConvexBody::ball(c, R), c, y) - expected));
      }
    }
    const bool ok = std::all_of(err.begin(), err.end(), [](const Max& m) { return m.value <= 1e-12; });
    verdict("C3", ok,
            fmt("radial closed forms (100 each): disc %.2e  hyperbolic ball %.2e  spherical cap %.2e",
                err[0].value, err[2].value, err[1].value));
  });
}

// ------------------------------------------------------------------- C4

// Pairs in the ideal triangle whose ray leaves through the imaginary axis.
std::vector<std::pair<HalfPlanePoint, HalfPlanePoint>> ideal_triangle_pairs(int count) {
  const ConvexBody body = ideal_triangle_body();
  std::vector<std::pair<HalfPlanePoint, HalfPlanePoint>> out;
  Rng rng = rng_for("c4", 0);
  const auto sample = [&rng] {
    for (;;) {
      const HalfPlanePoint p{rng.uniform(0.02, 0.98), std::exp(rng.uniform(std::log(0.05), std::log(6.0)))};
      if (in_ideal_triangle(p) && std::hypot(p.re - 0.5, p.im) > 0.52) return p;
    }
  };
  while (static_cast<int>(out.size()) < count) {
    const HalfPlanePoint a = sample(), b = sample();
    const Point pa = halfplane_to_hyperboloid(a), pb = halfplane_to_hyperboloid(b);
    if (dist(pa, pb) < 1e-3) continue;
    const auto hit = ray_exit(body, unit_tangent(pa, pb));
    if (!hit || hit->facet_indices != std::vector<int>{0}) continue;
    out.emplace_back(a, b);
  }
  return out;
}

void c4() {
  criterion("C4", "ideal triangle", [] {
    const ConvexBody body = ideal_triangle_body();
    Max published, corrected;
    double example_f = 0.0, example_pub = 0.0;
    for (const auto& [a, b] : ideal_triangle_pairs(50)) {
      const double f = funk_f1(body, halfplane_to_hyperboloid(a), halfplane_to_hyperboloid(b));
      const double m1 = ideal_triangle_slope(a), m2 = ideal_triangle_slope(b);
      const double as_printed = std::log((1.0 - m1 * m1) / (1.0 - m2 * m2) * m2 / m1);
      if (published.value == 0.0) example_f = f, example_pub = as_printed;
      published.add(std::abs(as_printed - f));
      corrected.add(std::abs(ideal_triangle_funk(a, b) - f));
    }
    verdict("C4", published.value <= 1e-9,
            fmt("ideal-triangle closed form as published vs funk_f1 (50 pairs): max residual %.3e", published.value));
    info(fmt("first pair: funk_f1=%.6f, published form=%.6f (opposite sign)", example_f, example_pub));
    detail(corrected.value <= 1e-9,
           fmt("orientation-corrected form log((1-m2^2)/(1-m1^2)*m1/m2): max residual %.3e", corrected.value));
  });
}

// ------------------------------------------------------------------- C5

void c5() {
  criterion("C5", "perspectivity", [] {
    Max literal, central, corrected, cr, hil, pencil;
    for (Kind target : {Kind::Spherical, Kind::Hyperbolic}) {
      for (int i = 0; i < 500; ++i) {
        Rng rng = rng_for("c5." + std::string(to_string(target)), i);
        const int dim = 2 + i % 2;
        const Geometry e(Kind::Euclidean, dim);
        const ConvexBody body = random_chart_polytope(rng, dim);
        const Point u = random_interior_point(rng, body);
        const Point v = random_interior_point(rng, body);
        double a = rng.uniform(0.1, 0.9), b = rng.uniform(0.1, 0.9);
        if (a > b) std::swap(a, b);
        const Vec d = v.coords() - u.coords();
        const std::array<Point, 4> quad{u, Point(e, u.coords() + a * d), Point(e, u.coords() + b * d), v};
        const PerspectivityReport r = perspectivity_checks(body, u, v, quad, target);
        literal.add(chord_residual_literal(u, v, target));
        central.add(chord_residual_literal(u, Point(e, -rng.uniform(0.2, 1.0) * u.coords()), target));
        corrected.add(r.chord);
        cr.add(r.cross_ratio);
        hil.add(r.hilbert);
      }
    }
    for (Kind k : kKinds) {
      for (int i = 0; i < 500; ++i) {
        Rng rng = rng_for("c5.pencil." + std::string(to_string(k)), i);
        const PencilInstance p = random_pencil(rng, Geometry(k, 2));
        pencil.add(pencil_residual(p.pencil, p.t1, p.t2));
      }
    }
    const bool ok = literal.value <= 1e-12 && cr.value <= 1e-10 && hil.value <= 1e-9 && pencil.value <= 1e-10;
    verdict("C5", ok,
            fmt("perspectivity (500 configurations each): chord identity as published on random pairs %.3e, "
                "cross ratio %.2e, Hilbert isometry %.2e, pencil %.2e",
                literal.value, cr.value, hil.value, pencil.value));
    detail(central.value <= 1e-12, fmt("chord identity as published, chords through the chart center: %.2e",
                                       central.value));
    detail(corrected.value <= 1e-12,
           fmt("chord identity with the offset factor sqrt(1 +- h^2): %.2e", corrected.value));
    detail(cr.value <= 1e-10, fmt("cross ratio preserved by P_s and P_h: %.2e", cr.value));
    detail(hil.value <= 1e-9, fmt("Hilbert distance preserved by lifting: %.2e", hil.value));
    detail(pencil.value <= 1e-10, fmt("pencil cross ratio independent of the transversal: %.2e", pencil.value));
  });
}

// ------------------------------------------------------------------- C6

void c6() {
  criterion("C6", "Beltrami-Klein", [] {
    const Geometry e(Kind::Euclidean, 2);
    Max iso, radial;
    for (Kind target : {Kind::Spherical, Kind::Hyperbolic}) {
      for (double R : {0.3, 0.6, 0.9}) {
        const ConvexBody disc = ConvexBody::ball(origin(e), R);
        const ConvexBody lifted = lift_body(disc, target);
        for (int i = 0; i < 200; ++i) {
          Rng rng = rng_for("c6." + std::string(to_string(target)) + std::to_string(R), i);
          const Point u = random_interior_point(rng, disc, 0.99);
          const Point v = random_interior_point(rng, disc, 0.99);
          iso.add(std::abs(hilbert(lifted, lift_point(u, target), lift_point(v, target)) - hilbert(disc, u, v)));
        }
      }
    }
    const ConvexBody unit = ConvexBody::ball(origin(e), 1.0);
    for (int i = 0; i < 200; ++i) {
      Rng rng = rng_for("c6.radial", i);
      const double r = rng.uniform(0.0, 0.99);
      const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Point y(e, Eigen::Vector2d(r * std::cos(a), r * std::sin(a)));
      radial.add(std::abs(hilbert(unit, origin(e), y) - 0.5 * std::log((1.0 + r) / (1.0 - r))));
    }
    verdict("C6", iso.value <= 1e-9 && radial.value <= 1e-12,
            fmt("Beltrami-Klein discs R in {0.3,0.6,0.9}: lifted Hilbert residual %.2e, unit-disc radial %.2e",
                iso.value, radial.value));
  });
}

// ------------------------------------------------------------------- C7

void c7() {
  criterion("C7", "trigonometry", [] {
    Max sine, right, cevian, menelaus, pencil;
    Min converse;
    for (Kind k : kKinds) {
      const Geometry g(k, 2);
      const TrigSampling ts = default_trig_sampling(g);
      for (int i = 0; i < 1000; ++i) {
        Rng rng = rng_for("c7." + std::string(to_string(k)), i);
        const Triangle t = random_triangle(rng, g, ts);
        sine.add(sine_rule_residual(t));
        right.add(right_triangle_residual(random_right_triangle(rng, g, ts)));
        cevian.add(cevian_residual(t, random_cevian_foot(rng, t)));
        const Hyperplane line = random_transversal(rng, t);
        menelaus.add(menelaus_residual(t, line));
        converse.add(menelaus_perturbed_residual(t, line, 1e-3));
        const PencilInstance p = random_pencil(rng, g);
        pencil.add(pencil_residual(p.pencil, p.t1, p.t2));
      }
    }
    const double worst = std::max({sine.value, right.value, cevian.value, menelaus.value, pencil.value});
    verdict("C7", worst <= 1e-10 && converse.value > 1e-6,
            fmt("trigonometry (1000 per geometry): sine %.1e right %.1e cevian %.1e Menelaus %.1e pencil %.1e; "
                "1e-3 perturbation min residual %.2e",
                sine.value, right.value, cevian.value, menelaus.value, pencil.value, converse.value));
  });
}

// ------------------------------------------------------------------- C8

void c8() {
  criterion("C8", "convexity", [] {
    std::array<Min, 2> sweep;
    for (int k = 0; k < 2; ++k) {
      const Kind kind = k == 0 ? Kind::Euclidean : Kind::Spherical;
      for (int i = 0; i < 2000; ++i) {
        Rng rng = rng_for("c8." + std::string(to_string(kind)), i);
        const ConvexBody body = random_body(rng, Geometry(kind, 2 + i % 2));
        const Point x = random_interior_point(rng, body);
        for (;;) {
          const Point y = random_interior_point(rng, body);
          const Geodesic alpha{random_unit_tangent(rng, y), 1.0};
          const double h = rng.uniform(0.01, 0.1);
          if (!contains(body, alpha.at(-h)) || !contains(body, alpha.at(h))) continue;
          sweep[k].add(second_difference(body, x, alpha, 0.0, h) / (h * h));
          break;
        }
      }
    }
    Rng rng(kSeed);
    const Geometry h2(Kind::Hyperbolic, 2);
    const ConvexBody poly = random_polytope(rng, origin(h2), default_polytope_options(h2));
    const double witness = most_negative_second_difference(poly, rng, 200, 0.05).scaled_value;
    Rng ball_rng(kSeed);
    const double ball = most_negative_second_difference(ConvexBody::ball(origin(h2), 1.5), ball_rng, 200, 0.05)
                            .scaled_value;
    verdict("C8", sweep[0].value >= -1e-8 && sweep[1].value >= -1e-8 && witness < -1e-6,
            fmt("convexity: min scaled second difference Euclidean %.2e spherical %.2e (2000 each); hyperbolic "
                "witness %.4f",
                sweep[0].value, sweep[1].value, witness));
    info(fmt("hyperbolic metric ball R=1.5, same search: min scaled second difference %.4f", ball));
  });
}

// ------------------------------------------------------------------- C9

void c9() {
  criterion("C9", "Finsler norm", [] {
    Max deriv, midpoint, center;
    for (Kind k : kKinds) {
      for (int i = 0; i < 200; ++i) {
        Rng rng = rng_for("c9." + std::string(to_string(k)), i);
        const Geometry g(k, 2 + i % 2);
        const ConvexBody body = random_body(rng, g);
        const Point x = random_interior_point(rng, body);
        const TangentVector xi = random_unit_tangent(rng, x);
        const double p = finsler_norm(body, xi);
        const double h = 1e-5;
        deriv.add(std::abs(funk_f1(body, x, exp(xi, h)) / h - p) / p);
        if (g.dim() == 2) midpoint.add(indicatrix_midpoint_max(body, x, 64));

        const double R = rng.uniform(0.2, k == Kind::Spherical ? 0.75 : 2.0);
        const Point c = random_base_point(rng, g, 0.5);
        const double len = rng.uniform(0.1, 2.0);
        const TangentVector v = random_unit_tangent(rng, c).scaled(len);
        const double factor = k == Kind::Euclidean   ? 1.0 / R
                              : k == Kind::Spherical ? 1.0 / std::tan(R)
                                                     : 1.0 / std::tanh(R);
        center.add(std::abs(finsler_norm(ConvexBody::ball(c, R), v) - len * factor));
      }
    }
    verdict("C9", deriv.value <= 1e-3 && midpoint.value <= 1.0 + 1e-10 && center.value <= 1e-12,
            fmt("Finsler norm (200 per geometry): derivative rel err %.2e, indicatrix midpoint max %.12f, "
                "center closed forms %.2e",
                deriv.value, midpoint.value, center.value));
  });
}

// ------------------------------------------------------------------ C10

struct CommandResult {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

CommandResult run(const std::string& cmd) {
  CommandResult r;
  const auto t0 = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = seconds_since(t0);
  return r;
}

void c10() {
  criterion("C10", "CLI", [] {
    const std::string cmd = std::string("\"") + FHGEO_PATH + "\" check all --seed 42 2>/dev/null";
    const CommandResult a = run(cmd);
    const CommandResult b = run(cmd);
    const bool same = a.out == b.out && !a.out.empty();
    const double slowest = std::max(a.seconds, b.seconds);
    verdict("C10", a.status == 0 && b.status == 0 && same && slowest <= 120.0,
            fmt("check all --seed 42: exit %d/%d, reports byte-identical: %s, %zu bytes, slowest run %.1fs",
                a.status, b.status, same ? "yes" : "no", a.out.size(), slowest));
  });
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  std::printf("acceptance  seed=%llu\n", static_cast<unsigned long long>(kSeed));
  for (const auto& c : {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10}) c();
  std::printf("acceptance: %d/10 criteria passed (%.1fs)\n", 10 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}

// fhgeo: Funk/Hilbert geometry from the command line.
//
//   fhgeo dist BODY --x=... --y=... [--metric funk|rfunk|hilbert] [--coords ...]
//   fhgeo norm BODY --x=... (--xi=... | --indicatrix N)
//   fhgeo project (--body FILE | --point=...) --target spherical|hyperbolic [--verify]
//   fhgeo check SUITE [--seed 42] [--samples 1000] [--jobs N] [--tol 1]
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 domain error.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "funkhilbert/body_io.hpp"
#include "funkhilbert/checks.hpp"
#include "funkhilbert/funk.hpp"
#include "funkhilbert/projective.hpp"

namespace {

using namespace fh;

std::string format_value(double v) {
  if (v == 0.0) return "0.000000000000";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

Vec parse_vector(const std::string& text) {
  std::vector<double> values;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == ',')) ++p;
    if (p == end) break;
    double v = 0.0;
    const auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc()) throw InputError("cannot parse coordinates '" + text + "'");
    values.push_back(v);
    p = res.ptr;
    if (p < end && *p != ',' && *p != ' ') throw InputError("cannot parse coordinates '" + text + "'");
  }
  if (values.empty()) throw InputError("empty coordinate list");
  return Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// Command-line point in the body's geometry. `ambient` takes the model's own
// coordinates; `chart` takes n coordinates in the chart {x_{n+1}=1} (lifted
// by the central projection); `halfplane` takes (re, im) for H^2.
Point parse_point(const std::string& text, const Geometry& g, const std::string& coords) {
  const Vec v = parse_vector(text);
  if (coords == "ambient") {
    if (v.size() != g.ambient_dim()) {
      throw InputError("expected " + std::to_string(g.ambient_dim()) + " ambient coordinates");
    }
    return Point(g, v);
  }
  if (coords == "chart") {
    if (v.size() != g.dim()) throw InputError("expected " + std::to_string(g.dim()) + " chart coordinates");
    const Point cp(Geometry(Kind::Euclidean, g.dim()), v);
    return g.curved() ? lift_point(cp, g.kind()) : cp;
  }
  if (coords == "halfplane") {
    if (!(g == Geometry(Kind::Hyperbolic, 2))) throw InputError("halfplane coordinates need a hyperbolic body of dimension 2");
    if (v.size() != 2) throw InputError("halfplane points have two coordinates");
    return halfplane_to_hyperboloid({v[0], v[1]});
  }
  throw InputError("unknown --coords value '" + coords + "'");
}

nlohmann::json to_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Kind parse_target(const std::string& t) {
  if (t == "spherical" || t == "sphere") return Kind::Spherical;
  if (t == "hyperbolic" || t == "hyperboloid") return Kind::Hyperbolic;
  throw InputError("--target must be spherical or hyperbolic");
}

int cmd_dist(const std::string& body_file, const std::string& metric, const std::string& coords,
             const std::string& xs, const std::string& ys) {
  const ConvexBody body = load_body(body_file);
  const Point x = parse_point(xs, body.geometry(), coords);
  const Point y = parse_point(ys, body.geometry(), coords);
  double value = 0.0;
  if (metric == "funk") {
    value = funk_f1(body, x, y);
  } else if (metric == "rfunk") {
    value = funk_f1(body, y, x);
  } else if (metric == "hilbert") {
    value = hilbert(body, x, y);
  } else {
    throw InputError("unknown --metric '" + metric + "'");
  }
  std::cout << format_value(value) << '\n';
  return 0;
}

int cmd_norm(const std::string& body_file, const std::string& coords, const std::string& xs,
             const std::string& xis, int indicatrix) {
  const ConvexBody body = load_body(body_file);
  const Point x = parse_point(xs, body.geometry(), coords);
  if (indicatrix > 0) {
    std::cout << "theta,vx,vy\n";
    for (const auto& s : indicatrix_sample(body, x, indicatrix)) {
      if (s.unbounded) {
        std::cout << format_value(s.theta) << ",inf,inf\n";
      } else {
        std::cout << format_value(s.theta) << ',' << format_value(s.vx) << ',' << format_value(s.vy) << '\n';
      }
    }
    return 0;
  }
  if (xis.empty()) throw InputError("norm needs --xi or --indicatrix");
  const Vec xi = parse_vector(xis);
  std::cout << "norm\n" << format_value(finsler_norm(body, TangentVector(x, xi))) << '\n';
  return 0;
}

int cmd_project(const std::string& body_file, const std::string& point, const std::string& target_name,
                bool verify) {
  const Kind target = parse_target(target_name);
  nlohmann::json out;
  double residual = 0.0;
  int mismatches = 0;
  if (!point.empty()) {
    const Vec v = parse_vector(point);
    const Point cp(Geometry(Kind::Euclidean, static_cast<int>(v.size())), v);
    const Point lifted = lift_point(cp, target);
    out["geometry"] = std::string(to_string(target));
    out["dim"] = lifted.geometry().dim();
    out["point"] = to_json(lifted.coords());
    residual = (chart_point(lifted).coords() - v).cwiseAbs().maxCoeff();
  } else if (!body_file.empty()) {
    const ConvexBody body = load_body(body_file);
    const ConvexBody lifted = lift_body(body, target);
    const std::string text = body_to_json(lifted);
    out = nlohmann::json::parse(text);
    if (verify) {
      // Re-import the emitted JSON and compare membership on a grid.
      const ConvexBody again = body_from_json(text);
      const int n = body.geometry().dim();
      const Geometry e(Kind::Euclidean, n);
      Rng rng(7);
      for (int k = 0; k < 2000; ++k) {
        Vec w(n);
        for (int j = 0; j < n; ++j) w[j] = rng.uniform(-1.0, 1.0);
        if (target == Kind::Hyperbolic && w.norm() >= 0.999) continue;
        const Point cp(e, w);
        if (std::abs(boundary_margin(body, cp)) < 1e-9) continue;
        const Point lp = lift_point(cp, target);
        residual = std::max(residual, (chart_point(lp).coords() - w).cwiseAbs().maxCoeff());
        if (contains(body, cp) != contains(again, lp)) ++mismatches;
      }
      const Point& wit = body.interior_witness();
      residual = std::max(residual,
                          (chart_point(again.interior_witness()).coords() - wit.coords()).cwiseAbs().maxCoeff());
    }
  } else {
    throw InputError("project needs --body or --point");
  }
  if (verify) {
    const bool ok = residual <= 1e-9 && mismatches == 0;
    nlohmann::json wrapped;
    wrapped["result"] = out;
    wrapped["verify"] = {{"roundtrip_residual", residual}, {"membership_mismatches", mismatches}, {"pass", ok}};
    std::cout << wrapped.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_check(const std::string& suite, const CheckOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const RunReport report = run_check(suite, opt);
  std::cout << report.format();
  std::cout.flush();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "wall time: %.2f s\n", secs);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Funk and Hilbert metrics in Euclidean, spherical and hyperbolic space"};
  app.require_subcommand(1);

  std::string body_file, metric = "funk", coords = "ambient", xs, ys, xis, point, target, suite;
  int indicatrix = 0;
  bool verify = false;
  CheckOptions opt;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* dist_cmd = app.add_subcommand("dist", "Funk, reverse Funk or Hilbert distance");
  dist_cmd->add_option("body", body_file, "body JSON file")->required();
  dist_cmd->add_option("--x", xs, "first point (comma separated)")->required();
  dist_cmd->add_option("--y", ys, "second point (comma separated)")->required();
  dist_cmd->add_option("--metric", metric, "funk | rfunk | hilbert")
      ->check(CLI::IsMember({"funk", "rfunk", "hilbert"}));
  dist_cmd->add_option("--coords", coords, "ambient | chart | halfplane")
      ->check(CLI::IsMember({"ambient", "chart", "halfplane"}));

  auto* norm_cmd = app.add_subcommand("norm", "Finsler norm or indicatrix samples (CSV)");
  norm_cmd->add_option("body", body_file, "body JSON file")->required();
  norm_cmd->add_option("--x", xs, "base point")->required();
  auto* xi_opt = norm_cmd->add_option("--xi", xis, "tangent vector in ambient coordinates");
  norm_cmd->add_option("--indicatrix", indicatrix, "number of indicatrix samples (dim 2)")
      ->excludes(xi_opt);
  norm_cmd->add_option("--coords", coords, "ambient | chart | halfplane")
      ->check(CLI::IsMember({"ambient", "chart", "halfplane"}));

  auto* project_cmd = app.add_subcommand("project", "Central projection of a chart point or body (JSON)");
  auto* body_opt = project_cmd->add_option("--body", body_file, "Euclidean body JSON file");
  project_cmd->add_option("--point", point, "chart point (n coordinates)")->excludes(body_opt);
  project_cmd->add_option("--target", target, "spherical | hyperbolic")->required();
  project_cmd->add_flag("--verify", verify, "re-import the result and report round-trip residuals");

  auto* check_cmd = app.add_subcommand("check", "Run property suites and print a report");
  check_cmd->add_option("suite", suite, "funk | projective | trig | convexity | all")
      ->required()
      ->check(CLI::IsMember({"funk", "projective", "trig", "convexity", "all"}));
  check_cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  check_cmd->add_option("--samples", opt.samples, "samples per sweep")->capture_default_str();
  check_cmd->add_option("--jobs", opt.jobs, "worker threads");
  check_cmd->add_option("--tol", opt.tol_scale, "multiplier on residual tolerances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist_cmd) return cmd_dist(body_file, metric, coords, xs, ys);
    if (*norm_cmd) return cmd_norm(body_file, coords, xs, xis, indicatrix);
    if (*project_cmd) return cmd_project(body_file, point, target, verify);
    if (*check_cmd) return cmd_check(suite, opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

#include "funkhilbert/body_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fh {

namespace {

using nlohmann::json;

Vec vec_from(const json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string("'") + field + "' must be an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(std::string("'") + field + "' must contain numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

json vec_to(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("body is missing '") + name + "'");
  return j.at(name);
}

Point point_from(const Geometry& g, const json& j, const char* name) {
  Vec v = vec_from(j, name);
  if (v.size() != g.ambient_dim()) {
    throw InputError(std::string("'") + name + "' needs " + std::to_string(g.ambient_dim()) +
                     " coordinates");
  }
  // The constructor renormalizes small drift and rejects points off the manifold.
  return Point(g, v);
}

}  // namespace

ConvexBody body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("body JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) throw InputError("body JSON must be an object");
  try {
    const Kind kind = kind_from_string(field(j, "geometry").get<std::string>());
    const Geometry g(kind, field(j, "dim").get<int>());
    const std::string body_kind = field(j, "kind").get<std::string>();

    if (body_kind == "ball") {
      return ConvexBody::ball(point_from(g, field(j, "center"), "center"),
                              field(j, "radius").get<double>());
    }
    if (body_kind != "polytope") throw InputError("'kind' must be 'polytope' or 'ball'");

    const json& hs = field(j, "halfspaces");
    if (!hs.is_array() || hs.empty()) throw InputError("'halfspaces' must be a nonempty array");
    std::vector<HalfSpace> facets;
    for (const auto& h : hs) {
      const Vec n = vec_from(field(h, "normal"), "normal");
      if (n.size() != g.ambient_dim()) {
        throw InputError("halfspace normal needs " + std::to_string(g.ambient_dim()) + " coordinates");
      }
      const double offset = h.contains("offset") ? h.at("offset").get<double>() : 0.0;
      facets.push_back(HalfSpace{Hyperplane::make(g, n, offset)});
    }
    return ConvexBody::polytope(g, std::move(facets),
                                point_from(g, field(j, "interior_point"), "interior_point"));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed body JSON: ") + e.what());
  }
}

std::string body_to_json(const ConvexBody& body) {
  const auto& g = body.geometry();
  json j;
  j["geometry"] = std::string(to_string(g.kind()));
  j["dim"] = g.dim();
  if (body.kind() == BodyKind::Ball) {
    j["kind"] = "ball";
    j["center"] = vec_to(body.center().coords());
    j["radius"] = body.radius();
  } else {
    j["kind"] = "polytope";
    json hs = json::array();
    for (const auto& f : body.facets()) {
      hs.push_back({{"normal", vec_to(f.plane.normal())}, {"offset", f.plane.offset()}});
    }
    j["halfspaces"] = hs;
    j["interior_point"] = vec_to(body.interior_witness().coords());
  }
  return j.dump(2);
}

ConvexBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open body file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return body_from_json(ss.str());
}

void save_body(const ConvexBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write body file '" + path + "'");
  out << body_to_json(body) << '\n';
}

}  // namespace fh

#pragma once

// Body files:
//   {"geometry":"euclidean|spherical|hyperbolic","dim":2,"kind":"polytope|ball",
//    "halfspaces":[{"normal":[...],"offset":0.0}],"center":[...],"radius":0.0,
//    "interior_point":[...]}
// Normals and points are ambient vectors; `offset` is only meaningful for
// Euclidean bodies. Normals are normalized and the body is validated on load.

#include <string>

#include "funkhilbert/bodies.hpp"

namespace fh {

ConvexBody body_from_json(const std::string& text);
std::string body_to_json(const ConvexBody& body);

ConvexBody load_body(const std::string& path);
void save_body(const ConvexBody& body, const std::string& path);

}  // namespace fh

#pragma once

#include <stdexcept>
#include <string>

namespace fh {

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, off-manifold coordinates, invalid bodies.
class InputError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Well-formed input outside the operation's domain (point outside a body,
/// ambiguous foot, coincident points, ...).
class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace fh

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nichols {

/// Input that cannot be parsed or violates a precondition of the pipeline
/// (for example a vertex label equal to 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search bound (objects of the groupoid, length of the longest word) was
/// hit. For a finite-type input this never happens at the default bounds.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::size_t bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// A self-check failed. These indicate either a bug or an input outside the
/// finite classification that slipped past the bounds.
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIntegral : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

class Unclassifiable : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace nichols

#pragma once

#include <stdexcept>
#include <string>

namespace logtor {

// Base class for all domain errors raised by the library.  The CLI maps
// HypothesisError and its kin to exit code 2, everything else to 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct UnsupportedExtensionError : Error {
  explicit UnsupportedExtensionError(const std::string& msg =
                                         "operation requires an algebraic extension beyond degree 2")
      : Error(msg) {}
};

struct ShapeMismatchError : Error {
  explicit ShapeMismatchError(const std::string& msg = "operands have different shape or degree")
      : Error(msg) {}
};

struct DegreeUnderflowError : Error {
  explicit DegreeUnderflowError(const std::string& msg) : Error(msg) {}
};

struct ZeroPointError : Error {
  explicit ZeroPointError(const std::string& msg = "projective point must have a nonzero coordinate")
      : Error(msg) {}
};

struct IdenticalDivisorsError : Error {
  explicit IdenticalDivisorsError(const std::string& msg =
                                      "pencil requires linearly independent polynomials")
      : Error(msg) {}
};

struct DependentHyperplanesError : Error {
  explicit DependentHyperplanesError(const std::string& msg =
                                         "pencil requires independent hyperplanes")
      : Error(msg) {}
};

struct CenterOnQuadricError : Error {
  explicit CenterOnQuadricError(const std::string& msg = "projection center lies on the quadric")
      : Error(msg) {}
};

struct DegeneratePlaneError : Error {
  explicit DegeneratePlaneError(const std::string& msg) : Error(msg) {}
};

struct AmbientTooSmallError : Error {
  explicit AmbientTooSmallError(const std::string& msg) : Error(msg) {}
};

struct InfiniteLocusError : Error {
  explicit InfiniteLocusError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedClassError : Error {
  explicit UnsupportedClassError(const std::string& msg) : Error(msg) {}
};

// Violated mathematical hypothesis of an operation (singular divisor where a
// smooth one is required, wrong degree range, unequal Jacobian spans, ...).
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

struct SingularSectionError : HypothesisError {
  explicit SingularSectionError(const std::string& msg) : HypothesisError(msg) {}
};

}  // namespace logtor

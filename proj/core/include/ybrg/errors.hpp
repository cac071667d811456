#pragma once

#include <stdexcept>
#include <string>

namespace ybrg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Equal, negative, or out-of-range slot indices in a chain embedding.
class InvalidSlots : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible dimensions.
class DimMismatch : public Error {
 public:
  using Error::Error;
};

/// Composition of an empty operator list.
class EmptyComposition : public Error {
 public:
  using Error::Error;
};

/// Particle or grid index outside its valid range.
class InvalidIndex : public Error {
 public:
  using Error::Error;
};

/// S-matrix denominator sinh(f + iu) within the singularity guard.
class SingularSMatrix : public Error {
 public:
  using Error::Error;
};

/// Anisotropy u outside the admissible interval.
class InvalidAnisotropy : public Error {
 public:
  using Error::Error;
};

/// Coupling pair outside the hyperbolic regime j_par >= j_perp > 0.
class NonHyperbolicRegime : public Error {
 public:
  using Error::Error;
};

/// Argument outside a function's mathematical domain by more than
/// float-noise tolerance.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-positive time argument.
class InvalidTime : public Error {
 public:
  using Error::Error;
};

/// Swap path that does not lead to the requested target ordering.
class PathMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ybrg

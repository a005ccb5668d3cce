#pragma once

#include <stdexcept>
#include <string>

namespace covtype {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simplex repeats a vertex or is empty.
class MalformedSimplex : public Error {
 public:
  using Error::Error;
};

/// A vertex was referenced that does not belong to the complex.
class UnknownVertex : public Error {
 public:
  using Error::Error;
};

/// A vertex map or identification collapses a simplex, or its image is not a
/// simplex of the target.
class NotSimplicial : public Error {
 public:
  using Error::Error;
};

/// A fresh vertex requested for a cone or suspension already exists.
class VertexCollision : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// A deterministic builder could not reach its target configuration.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// Input document could not be interpreted (JSON shape, field names, tokens).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace covtype

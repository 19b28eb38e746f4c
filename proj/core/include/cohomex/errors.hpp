#pragma once

#include <stdexcept>
#include <string>

namespace cohomex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed descriptor, matrix file, or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain (non-prime p,
/// non-normal subgroup, nonabelian input where an abelian one is needed, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard (group order, generator count, entry size,
/// time limit, enumeration cap) refused the job.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A local elimination could not resolve an entry at the working precision.
class PrecisionExhausted : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// A mathematical invariant that must hold was observed to fail; this always
/// signals a bug (or corrupted input), never a legitimate outcome.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but lies outside the supported regime.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohomex

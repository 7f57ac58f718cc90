#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ennomp {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File-level failures: missing files, short reads, malformed headers.
// The CLI maps these to exit code 1.
struct IoError : Error {
  using Error::Error;
};

// Contract violations on otherwise readable inputs: incompatible shapes,
// out-of-range parameters, misuse of stateful objects. CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct ZeroColumn : ValidationError {
  explicit ZeroColumn(std::ptrdiff_t column)
      : ValidationError("column " + std::to_string(column) +
                        " has (near-)zero norm and cannot be normalized"),
        index(column) {}
  std::ptrdiff_t index;
};

struct BadMagic : IoError {
  using IoError::IoError;
};

struct TruncatedFile : IoError {
  using IoError::IoError;
};

struct DimensionZero : IoError {
  using IoError::IoError;
};

struct AllExcluded : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyCandidates : ValidationError {
  using ValidationError::ValidationError;
};

struct NotACandidate : ValidationError {
  explicit NotACandidate(std::ptrdiff_t atom)
      : ValidationError("atom " + std::to_string(atom) +
                        " is not in the candidate set"),
        index(atom) {}
  std::ptrdiff_t index;
};

struct DeltaUnset : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace ennomp

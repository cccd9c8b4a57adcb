#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dcot {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shapes of two operands do not agree.
struct DimMismatch : Error {
  using Error::Error;
};

/// A row expected to be nonzero has Euclidean norm below 1e-12.
struct ZeroRow : Error {
  explicit ZeroRow(Eigen::Index row_index)
      : Error("row " + std::to_string(row_index) + " has (near-)zero norm"),
        row(row_index) {}
  Eigen::Index row;
};

/// A Sinkhorn scaling vector left (0, inf); the regularization is too large
/// for the cost scale.
struct NonFiniteIterate : Error {
  using Error::Error;
};

/// Problem size exceeds what an exact enumeration can handle.
struct TooLarge : Error {
  using Error::Error;
};

/// A scalar argument violated its documented range.
struct OutOfRange : Error {
  using Error::Error;
};

/// Mini-batch too small for the requested operation.
struct BatchTooSmall : Error {
  using Error::Error;
};

/// A dataset or run specification violates its invariants.
struct InvalidSpec : Error {
  using Error::Error;
};

struct InvalidBatchSize : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Both classes are required (e.g. for a clean-vs-noisy AUC) but only one is
/// present.
struct SingleClass : Error {
  using Error::Error;
};

struct EmptySweep : Error {
  using Error::Error;
};

/// Malformed or unknown configuration input.
struct ConfigError : Error {
  using Error::Error;
};

/// Filesystem / serialization failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace dcot

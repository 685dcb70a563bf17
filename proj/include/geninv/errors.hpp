#pragma once

#include <stdexcept>
#include <string>

namespace geninv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

/// Input contains NaN or Inf entries.
struct NonFinite : Error {
    using Error::Error;
};

/// Iterative factorization failed to converge (diagnostic; not expected on
/// well-conditioned inputs).
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// An operand required to be nonzero has rank 0.
struct ZeroMatrix : Error {
    using Error::Error;
};

/// (AB)^k vanished, so the core-EP pair decomposition has no invertible core.
struct NilpotentProduct : Error {
    using Error::Error;
};

/// Leading block of a triangular form fails the nonsingularity tolerance.
struct SingularLeadingBlock : Error {
    using Error::Error;
};

struct RankOutOfRange : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Planted-structure generator parameters do not fit together.
struct ParameterMismatch : Error {
    using Error::Error;
};

/// Matrix file could not be parsed (strict schema).
struct ParseError : Error {
    using Error::Error;
};

} // namespace geninv

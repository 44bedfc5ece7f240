#pragma once

#include <stdexcept>
#include <string>

namespace latdense {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch between arguments (wrong sizes, mixed dimensions).
struct DimensionError : Error {
  using Error::Error;
};

// Input required independent or invertible columns and did not have them.
struct RankError : Error {
  using Error::Error;
};

// Operation defined only for the polyhedral norms (1 and inf).
struct UnsupportedNormError : Error {
  using Error::Error;
};

// Vertex enumeration detected an unbounded feasible direction.
struct BoundednessError : Error {
  using Error::Error;
};

// A residue class had fewer sample points than coefficients to fit.
struct SampleError : Error {
  using Error::Error;
};

// Fitted quasipolynomial failed to reproduce a supplied count exactly.
struct InconsistencyError : Error {
  using Error::Error;
};

// Residue classes disagree on the coefficient that must be shared.
struct ConstancyError : Error {
  using Error::Error;
};

// Caller violated a documented precondition.
struct ContractError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

}  // namespace latdense

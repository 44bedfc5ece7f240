#pragma once

// Exact dense linear algebra over the rationals. Everything runs through
// fraction-free (Bareiss) elimination on denominator-cleared integer
// matrices, so intermediate entries are minors of the input and every
// division in the update is exact.

#include <optional>

#include "latdense/errors.hpp"
#include "latdense/numeric.hpp"

namespace latdense {

// Determinant. Throws DimensionError unless the matrix is square.
Rat det(const IntMat& m);
Rat det(const RatMat& m);

// Row rank, full pivoting.
Index rank(const IntMat& m);
Index rank(const RatMat& m);

// Unique solution of m * x = rhs for a matrix with independent columns
// (rows >= cols). Returns nullopt when the system is inconsistent and
// throws RankError when the columns are dependent.
std::optional<RatVec> solve(const IntMat& m, const RatVec& rhs);
std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs);

// Square-system variant for callers that probe many candidate systems:
// singular coefficient matrices yield nullopt instead of an error.
std::optional<RatVec> solve_if_unique(const RatMat& m, const RatVec& rhs);

// Inverse of a square matrix. Throws RankError when singular.
RatMat inverse(const IntMat& m);
RatMat inverse(const RatMat& m);

}  // namespace latdense

#pragma once

// Lattice-point counting and quasipolynomial fitting. Counting happens in
// lattice coordinates: the polytope is mapped through the inverse basis and
// integer points are swept column by column, with the innermost coordinate
// resolved as one exact interval instead of a per-point test.

#include <functional>
#include <vector>

#include "latdense/geometry.hpp"

namespace latdense {

struct Lattice {
  IntMat basis;     // columns generate the lattice
  Int determinant;  // |det(basis)| when square, else 0
};

// Throws RankError when the columns are dependent.
Lattice lattice_from_basis(const IntMat& basis);

struct CountEntry {
  long t = 0;
  Int count;
};

struct CountSeries {
  std::vector<CountEntry> entries;  // strictly increasing t
};

// One coefficient row per residue class of the period; row r applies to
// dilation factors congruent to r. Column j holds the coefficient of t^j.
struct Quasipolynomial {
  int degree = 0;
  long period = 1;
  RatMat coefficients;  // period rows, degree+1 columns
};

// |tP ∩ L| for a full-rank lattice, exact. t = 0 counts the origin.
Int count_dilate(const HPolytope& p, const Lattice& lat, long t);

// |B_{p,r} ∩ Z^dim|: closed forms for norms one and inf, interval sweep for
// the Euclidean norm.
Int ball_lattice_count(NormKind norm, long r, int dim);

// Interpolates one polynomial of the given degree per residue class from the
// first degree+1 samples of that class, then checks every supplied count
// against the fit. Throws SampleError when a class is short of samples and
// InconsistencyError when a count is not reproduced.
Quasipolynomial ehrhart_fit(const CountSeries& counts, int degree, long period);

Rat eval_quasipolynomial(const Quasipolynomial& q, long t);

// The degree coefficient, which must be shared by all residue classes.
// Throws ConstancyError when the classes disagree.
Rat leading_coefficient(const Quasipolynomial& q);

// Fits from sparse samples t = r + period * j, j = 1..degree+2 for each
// residue r, widening the period (x2 then x6) when validation fails.
Quasipolynomial fit_dilate_series(const std::function<Int(long)>& count_at, int degree,
                                  long initial_period);

}  // namespace latdense

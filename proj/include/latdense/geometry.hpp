#pragma once

// Exact polyhedral geometry for the two polyhedral norms. Balls and cones
// are kept in halfspace form; vertices come from exhaustive enumeration of
// square subsystems, and volume from a pulling triangulation of the face
// lattice, so every quantity stays rational end to end.

#include <vector>

#include "latdense/errors.hpp"
#include "latdense/linalg.hpp"
#include "latdense/numeric.hpp"

namespace latdense {

enum class NormKind { kOne, kTwo, kInf };

// normal . x <= offset
struct Halfspace {
  RatVec normal;
  Rat offset;
};

struct HPolytope {
  Index dim = 0;
  std::vector<Halfspace> halfspaces;
};

struct VertexSet {
  Index dim = 0;
  std::vector<RatVec> vertices;  // sorted lexicographically, no duplicates
};

// Simplicial cone spanned by the columns of generators.
struct Cone {
  IntMat generators;
};

Int norm_l1(const IntVec& x);
Int norm_linf(const IntVec& x);
Int norm_l2_squared(const IntVec& x);
// ||x||_p <= r, with the Euclidean case compared in squares.
bool within_ball(const IntVec& x, NormKind norm, long r);

// Unit ball of the norm as a halfspace system. Euclidean balls are not
// polytopes; asking for one is an UnsupportedNormError.
HPolytope ball_polytope(NormKind norm, Index dim);

// Exact volume of the unit ball: 2^n / n! for norm one, 2^n for norm inf.
Rat ball_volume(NormKind norm, Index dim);

// Halfspace form of cone(b_1, ..., b_n) for an invertible generator matrix:
// each row of the inverse gives one facet, scaled to coprime integers.
HPolytope cone_halfspaces(const Cone& c);

HPolytope intersect(const HPolytope& a, const HPolytope& b);

// All vertices of a bounded polytope: every invertible n-subsystem of the
// halfspace boundaries is solved and the solution kept when feasible.
// When fewer than dim+1 vertices show up, a recession direction search
// distinguishes genuinely flat input from an unbounded one (best effort:
// an empty unbounded system also trips it).
VertexSet enumerate_vertices(const HPolytope& p);

// Volume via a pulling triangulation of the face lattice recovered from
// vertex/halfspace incidence. Returns 0 for sets of lower affine dimension.
// The vertex set must belong to the polytope.
Rat volume(const VertexSet& v, const HPolytope& p);

// Least common denominator over all vertex coordinates.
Int polytope_denominator(const VertexSet& v);

}  // namespace latdense

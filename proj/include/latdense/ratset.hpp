#pragma once

// Text format for semi-simple subsets of Z^n and the checks that make one
// trustworthy: per-component simplicity (independent generators) and a
// bounded search for overlaps between components.
//
//   set        := component ("|" component)*
//   component  := vector ["+" "{" vector ("," vector)* "}" "*"]
//   vector     := "(" integer ("," integer)* ")"
//
// Whitespace is free between tokens and "#" starts a comment that runs to
// end of line. A bare vector denotes a singleton component.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latdense/errors.hpp"
#include "latdense/numeric.hpp"

namespace latdense {

// offset + N-combinations of the generator columns.
struct SimpleComponent {
  IntVec offset;
  IntMat generators;  // dim rows, one column per generator; may have 0 columns
};

struct SemiSimpleSet {
  Index dim = 0;
  std::vector<SimpleComponent> components;
};

// Throws ParseError with 1-based line/column on malformed input.
SemiSimpleSet parse(std::string_view text);

// Inverse of parse up to whitespace and comments: parse(format(s)) == s.
std::string format(const SemiSimpleSet& s);

struct ComponentCheck {
  std::size_t index = 0;  // position in the set, 0-based
  bool simple = false;    // generators independent (implies no zero, no duplicate)
  bool full_rank = false;
  Int lattice_determinant;            // |det|, only meaningful when full_rank
  std::vector<std::string> failures;  // human-readable reasons when not simple
};

struct ValidationReport {
  bool ok = false;  // every component simple
  std::vector<ComponentCheck> components;
};

ValidationReport validate(const SemiSimpleSet& s);

struct MembershipWitness {
  std::size_t component = 0;
  IntVec coefficients;  // nonnegative, one per generator of that component
};

// First component containing x, with the (unique) coefficient vector.
// Requires every component simple; throws ContractError otherwise.
std::optional<MembershipWitness> membership(const SemiSimpleSet& s, const IntVec& x);

// Single-component membership for callers that already validated simplicity.
std::optional<IntVec> component_membership(const SimpleComponent& c, const IntVec& x);

struct OverlapWitness {
  IntVec point;
  std::vector<std::size_t> components;  // all components containing the point
};

struct DisjointReport {
  long radius = 0;
  bool clean = false;
  std::vector<OverlapWitness> witnesses;
};

// Scans the integer box [-radius, radius]^dim for points claimed by more
// than one component. A clean result bounds overlaps away only inside the
// box; it is evidence, not a proof of disjointness.
DisjointReport check_disjoint_bounded(const SemiSimpleSet& s, long radius);

}  // namespace latdense

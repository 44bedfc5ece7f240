#pragma once

// Natural density of semi-simple subsets of Z^n relative to balls of the
// polyhedral norms. A full-rank simple component a + B* has density
//
//   vol(B_1 ∩ cone(B)) / (vol(B_1) * |det B|)
//
// and a rank-deficient component has density zero; a disjoint union sums
// component densities. The same number is reachable through the leading
// coefficient of the lattice-point quasipolynomial of B_1 ∩ cone(B), which
// gives an independent exact cross-check.

#include <optional>
#include <vector>

#include "latdense/lattice.hpp"
#include "latdense/ratset.hpp"

namespace latdense {

enum class DensityRoute { kVolume, kEhrhart };

struct ComponentDensity {
  std::size_t index = 0;
  bool full_rank = false;
  Rat density;
};

struct DensityReport {
  NormKind norm = NormKind::kOne;
  std::vector<ComponentDensity> components;
  Rat total;
  // True unless a bounded disjointness check ran and came back clean. The
  // total over-counts overlapping components, so callers must surface this.
  bool disjointness_caveat = true;
};

// Density of one simple component. Throws ContractError when the component
// is not simple and UnsupportedNormError for the Euclidean norm.
Rat component_density(const SimpleComponent& c, NormKind norm,
                      DensityRoute route = DensityRoute::kVolume);

// Lattice-point quasipolynomial of t(B_1 ∩ cone(B)) with respect to the
// component's generator lattice. Requires a full-rank simple component.
Quasipolynomial component_ehrhart(const SimpleComponent& c, NormKind norm);

DensityReport set_density(const SemiSimpleSet& s, NormKind norm,
                          DensityRoute route = DensityRoute::kVolume,
                          bool disjoint_checked_clean = false);

struct EstimateRow {
  long radius = 0;
  Int hits;
  Int ball;
  Rat frequency;
  std::optional<Rat> exact_error;  // |frequency - exact density| when available
};

struct EstimateTable {
  NormKind norm = NormKind::kOne;
  std::vector<EstimateRow> rows;
};

// Exact |S ∩ B_r| / |Z^n ∩ B_r| by direct membership over the ball. Works
// for all three norms; this is the only density route for the Euclidean one.
EstimateRow empirical_density(const SemiSimpleSet& s, NormKind norm, long r);

// Empirical frequencies at several radii. For the polyhedral norms on a
// valid set the rows carry the exact deviation from the limit density.
EstimateTable convergence_table(const SemiSimpleSet& s, NormKind norm,
                                const std::vector<long>& radii);

// Shift stability of counting: for every signed unit shift e,
// |M ∩ B_{r-1}| <= |(e+M) ∩ B_r| <= |M ∩ B_{r+1}| where M is the monoid
// generated by c's generators. Requires r > 1 and a full-rank component.
bool shift_sandwich_check(const SimpleComponent& c, NormKind norm, long r);

}  // namespace latdense

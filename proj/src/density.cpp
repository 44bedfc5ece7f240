#include "latdense/density.hpp"

#include <algorithm>

namespace latdense {
namespace {

void require_simple(const SimpleComponent& c, const char* who) {
  if (rank(c.generators) < c.generators.cols())
    throw ContractError(std::string(who) + ": component is not simple");
}

void require_valid(const SemiSimpleSet& s, const char* who) {
  for (const auto& c : s.components) require_simple(c, who);
}

HPolytope component_polytope(const SimpleComponent& c, NormKind norm) {
  const Index n = c.offset.size();
  return intersect(ball_polytope(norm, n), cone_halfspaces(Cone{c.generators}));
}

// Membership test precompiled per component. Full-rank components reduce to
// adjugate divisibility, which keeps large box scans in pure integer work.
struct CompiledComponent {
  const SimpleComponent* c = nullptr;
  bool full_rank = false;
  IntMat adj;  // inverse(generators) * det, entrywise integral
  Int det;     // signed

  explicit CompiledComponent(const SimpleComponent& comp) : c(&comp) {
    const Index n = comp.offset.size();
    const Index k = comp.generators.cols();
    full_rank = k == n && n > 0;
    if (full_rank) {
      const Rat d = latdense::det(comp.generators);
      det = num(d);
      const RatMat inv = inverse(comp.generators);
      adj.resize(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) adj(i, j) = num(Rat(inv(i, j) * d));
      }
    }
  }

  bool contains(const IntVec& x) const {
    if (!full_rank) return component_membership(*c, x).has_value();
    const Index n = adj.rows();
    for (Index i = 0; i < n; ++i) {
      Int s = 0;
      for (Index j = 0; j < n; ++j) s += adj(i, j) * (x(j) - c->offset(j));
      // coefficient i is s / det; membership needs it integral and >= 0
      if (det > 0) {
        if (s < 0 || s % det != 0) return false;
      } else {
        if (s > 0 || s % det != 0) return false;
      }
    }
    return true;
  }
};

template <class Fn>
void scan_box(Index n, long radius, Fn&& fn) {
  IntVec x(n);
  for (Index i = 0; i < n; ++i) x(i) = -radius;
  while (true) {
    fn(x);
    Index i = n - 1;
    while (i >= 0 && x(i) == radius) {
      x(i) = -radius;
      --i;
    }
    if (i < 0) break;
    x(i) += 1;
  }
}

}  // namespace

Rat component_density(const SimpleComponent& c, NormKind norm, DensityRoute route) {
  require_simple(c, "component_density");
  if (norm == NormKind::kTwo)
    throw UnsupportedNormError("component_density: no exact density for the Euclidean norm");
  const Index n = c.offset.size();
  const Index k = c.generators.cols();
  if (k < n) return 0;

  if (route == DensityRoute::kEhrhart)
    return leading_coefficient(component_ehrhart(c, norm)) / ball_volume(norm, n);

  const HPolytope p = component_polytope(c, norm);
  const Rat vol = volume(enumerate_vertices(p), p);
  const Int d = abs(num(det(c.generators)));
  return vol / (ball_volume(norm, n) * Rat(d));
}

Quasipolynomial component_ehrhart(const SimpleComponent& c, NormKind norm) {
  require_simple(c, "component_ehrhart");
  if (norm == NormKind::kTwo)
    throw UnsupportedNormError("component_ehrhart: Euclidean ball is not a polytope");
  const Index n = c.offset.size();
  if (c.generators.cols() != n)
    throw ContractError("component_ehrhart: component must be full rank");

  const HPolytope p = component_polytope(c, norm);
  const Lattice lat = lattice_from_basis(c.generators);

  // The counting function is periodic with the denominator of the polytope
  // expressed in lattice coordinates, so start the fit ladder there.
  const RatMat binv = inverse(lat.basis);
  VertexSet vs = enumerate_vertices(p);
  Int denom = 1;
  for (const auto& v : vs.vertices) {
    const RatVec a = binv * v;
    denom = boost::multiprecision::lcm(denom, common_denominator(a));
  }
  const long period = denom.convert_to<long>();
  return fit_dilate_series([&](long t) { return count_dilate(p, lat, t); },
                           static_cast<int>(n), period);
}

DensityReport set_density(const SemiSimpleSet& s, NormKind norm, DensityRoute route,
                          bool disjoint_checked_clean) {
  require_valid(s, "set_density");
  DensityReport report;
  report.norm = norm;
  report.total = 0;
  report.disjointness_caveat = !disjoint_checked_clean;
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    ComponentDensity cd;
    cd.index = ci;
    cd.full_rank = s.components[ci].generators.cols() == s.dim;
    cd.density = component_density(s.components[ci], norm, route);
    report.total += cd.density;
    report.components.push_back(std::move(cd));
  }
  return report;
}

EstimateRow empirical_density(const SemiSimpleSet& s, NormKind norm, long r) {
  require_valid(s, "empirical_density");
  if (r < 0) throw ContractError("empirical_density: radius must be nonnegative");
  std::vector<CompiledComponent> compiled;
  compiled.reserve(s.components.size());
  for (const auto& c : s.components) compiled.emplace_back(c);

  EstimateRow row;
  row.radius = r;
  row.hits = 0;
  scan_box(s.dim, r, [&](const IntVec& x) {
    if (!within_ball(x, norm, r)) return;
    for (const auto& cc : compiled) {
      if (cc.contains(x)) {
        ++row.hits;
        return;
      }
    }
  });
  row.ball = ball_lattice_count(norm, r, static_cast<int>(s.dim));
  row.frequency = Rat(row.hits, row.ball);
  return row;
}

EstimateTable convergence_table(const SemiSimpleSet& s, NormKind norm,
                                const std::vector<long>& radii) {
  EstimateTable table;
  table.norm = norm;
  std::optional<Rat> exact;
  if (norm != NormKind::kTwo) exact = set_density(s, norm).total;
  for (long r : radii) {
    EstimateRow row = empirical_density(s, norm, r);
    if (exact) row.exact_error = abs(Rat(row.frequency - *exact));
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool shift_sandwich_check(const SimpleComponent& c, NormKind norm, long r) {
  require_simple(c, "shift_sandwich_check");
  if (r <= 1) throw ContractError("shift_sandwich_check: radius must exceed 1");
  const Index n = c.offset.size();
  if (c.generators.cols() != n)
    throw ContractError("shift_sandwich_check: component must be full rank");

  // Count the monoid itself, without the offset.
  SimpleComponent monoid;
  monoid.offset = IntVec::Zero(n);
  monoid.generators = c.generators;
  CompiledComponent cc(monoid);

  Int inner = 0;  // |M ∩ B_{r-1}|
  Int outer = 0;  // |M ∩ B_{r+1}|
  std::vector<Int> shifted(static_cast<std::size_t>(2 * n), Int(0));  // |(e+M) ∩ B_r|
  scan_box(n, r + 1, [&](const IntVec& x) {
    if (!cc.contains(x)) return;
    if (within_ball(x, norm, r - 1)) ++inner;
    if (within_ball(x, norm, r + 1)) ++outer;
    IntVec y = x;
    for (Index i = 0; i < n; ++i) {
      y(i) += 1;
      if (within_ball(y, norm, r)) ++shifted[static_cast<std::size_t>(2 * i)];
      y(i) -= 2;
      if (within_ball(y, norm, r)) ++shifted[static_cast<std::size_t>(2 * i + 1)];
      y(i) += 1;
    }
  });
  for (const Int& count : shifted) {
    if (count < inner || count > outer) return false;
  }
  return true;
}

}  // namespace latdense

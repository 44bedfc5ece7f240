#include "latdense/lattice.hpp"

#include <algorithm>
#include <map>

namespace latdense {
namespace {

Int int_pow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Counts integer points of the Euclidean ball by fixing coordinates one at a
// time; the admissible range shrinks with the remaining budget, and the last
// coordinate is a single isqrt interval.
Int l2_count(int level, int dim, const Int& remaining) {
  using boost::multiprecision::sqrt;
  const Int s = sqrt(remaining);
  if (level == dim - 1) return 2 * s + 1;
  Int total = 0;
  for (Int v = -s; v <= s; ++v) total += l2_count(level + 1, dim, Int(remaining - v * v));
  return total;
}

}  // namespace

Lattice lattice_from_basis(const IntMat& basis) {
  if (rank(basis) < basis.cols()) throw RankError("lattice_from_basis: dependent columns");
  Lattice lat;
  lat.basis = basis;
  lat.determinant = 0;
  if (basis.rows() == basis.cols() && basis.rows() > 0) {
    Rat d = det(basis);
    lat.determinant = abs(num(d));
  }
  return lat;
}

Int count_dilate(const HPolytope& p, const Lattice& lat, long t) {
  const Index n = p.dim;
  if (lat.basis.rows() != n || lat.basis.cols() != n)
    throw ContractError("count_dilate: lattice must be full rank in the ambient dimension");
  if (t < 0) throw ContractError("count_dilate: dilation factor must be nonnegative");

  const VertexSet vs = enumerate_vertices(p);
  if (vs.vertices.empty()) return 0;

  // Lattice coordinates of the vertices give a bounding box; halfspaces
  // transform by the basis so the sweep runs over integer vectors directly.
  const RatMat binv = inverse(lat.basis);
  std::vector<RatVec> alpha;
  alpha.reserve(vs.vertices.size());
  for (const auto& v : vs.vertices) alpha.push_back(binv * v);

  std::vector<Int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    Rat mn = alpha[0](j), mx = alpha[0](j);
    for (const auto& a : alpha) {
      mn = std::min(mn, a(j));
      mx = std::max(mx, a(j));
    }
    lo[static_cast<std::size_t>(j)] = rat_ceil(Rat(mn * t));
    hi[static_cast<std::size_t>(j)] = rat_floor(Rat(mx * t));
  }

  // Each transformed halfspace is cleared to integer coefficients so the
  // sweep below runs entirely in integers (no gcd normalization per step).
  const auto m = p.halfspaces.size();
  std::vector<IntVec> coeff(m);
  std::vector<Int> bound(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& h = p.halfspaces[i];
    RatVec w(n + 1);
    for (Index j = 0; j < n; ++j) {
      Rat s = 0;
      for (Index r = 0; r < n; ++r) s += h.normal(r) * Rat(lat.basis(r, j));
      w(j) = s;
    }
    w(n) = h.offset * t;
    const Int scale = common_denominator(w);
    IntVec wi(n);
    for (Index j = 0; j < n; ++j) wi(j) = num(Rat(w(j) * scale));
    coeff[i] = std::move(wi);
    bound[i] = num(Rat(w(n) * scale));
  }

  Int total = 0;
  std::vector<Int> part(m, Int(0));
  auto sweep = [&](auto&& self, Index level) -> void {
    const std::size_t lv = static_cast<std::size_t>(level);
    if (level == n - 1) {
      Int a = lo[lv];
      Int b = hi[lv];
      for (std::size_t i = 0; i < m; ++i) {
        const Int& c = coeff[i](level);
        const Int rem = bound[i] - part[i];
        if (c == 0) {
          if (rem < 0) return;
        } else if (c > 0) {
          b = std::min(b, floor_div(rem, c));
        } else {
          a = std::max(a, ceil_div(rem, c));
        }
      }
      if (b >= a) total += b - a + 1;
      return;
    }
    if (lo[lv] > hi[lv]) return;
    for (std::size_t i = 0; i < m; ++i) part[i] += coeff[i](level) * lo[lv];
    for (Int v = lo[lv];; ++v) {
      self(self, level + 1);
      if (v == hi[lv]) break;
      for (std::size_t i = 0; i < m; ++i) part[i] += coeff[i](level);
    }
    for (std::size_t i = 0; i < m; ++i) part[i] -= coeff[i](level) * hi[lv];
  };
  sweep(sweep, 0);
  return total;
}

Int ball_lattice_count(NormKind norm, long r, int dim) {
  if (dim < 1) throw DimensionError("ball_lattice_count: dimension must be positive");
  if (r < 0) throw ContractError("ball_lattice_count: radius must be nonnegative");
  switch (norm) {
    case NormKind::kInf:
      return int_pow(Int(2 * r + 1), dim);
    case NormKind::kOne: {
      // Points with exactly k nonzero coordinates: choose the support, the
      // signs, and a composition of the norm budget.
      Int total = 0;
      for (int k = 0; k <= dim; ++k)
        total += int_pow(Int(2), k) * binomial(dim, k) * binomial(r, k);
      return total;
    }
    case NormKind::kTwo:
      return l2_count(0, dim, Int(Int(r) * r));
  }
  return 0;
}

Quasipolynomial ehrhart_fit(const CountSeries& counts, int degree, long period) {
  if (degree < 0) throw ContractError("ehrhart_fit: degree must be nonnegative");
  if (period < 1) throw ContractError("ehrhart_fit: period must be positive");
  for (std::size_t i = 0; i + 1 < counts.entries.size(); ++i) {
    if (counts.entries[i].t >= counts.entries[i + 1].t)
      throw ContractError("ehrhart_fit: dilation factors must be strictly increasing");
  }

  std::vector<std::vector<const CountEntry*>> classes(static_cast<std::size_t>(period));
  for (const auto& e : counts.entries) {
    if (e.t < 0) throw ContractError("ehrhart_fit: dilation factors must be nonnegative");
    classes[static_cast<std::size_t>(e.t % period)].push_back(&e);
  }

  Quasipolynomial q;
  q.degree = degree;
  q.period = period;
  q.coefficients.resize(period, degree + 1);
  const Index cols = degree + 1;
  for (long r = 0; r < period; ++r) {
    const auto& cls = classes[static_cast<std::size_t>(r)];
    if (static_cast<Index>(cls.size()) < cols)
      throw SampleError("ehrhart_fit: residue class " + std::to_string(r) + " has " +
                        std::to_string(cls.size()) + " samples, needs " + std::to_string(cols));
    RatMat a(cols, cols);
    RatVec b(cols);
    for (Index i = 0; i < cols; ++i) {
      Rat p = 1;
      for (Index j = 0; j < cols; ++j) {
        a(i, j) = p;
        p *= cls[static_cast<std::size_t>(i)]->t;
      }
      b(i) = Rat(cls[static_cast<std::size_t>(i)]->count);
    }
    auto x = solve(a, b);  // Vandermonde on distinct nodes is invertible
    q.coefficients.row(r) = x->transpose();
  }

  for (const auto& e : counts.entries) {
    if (eval_quasipolynomial(q, e.t) != Rat(e.count))
      throw InconsistencyError("ehrhart_fit: fitted polynomial misses the count at t = " +
                               std::to_string(e.t));
  }
  return q;
}

Rat eval_quasipolynomial(const Quasipolynomial& q, long t) {
  if (t < 0) throw ContractError("eval_quasipolynomial: t must be nonnegative");
  const Index row = static_cast<Index>(t % q.period);
  Rat acc = 0;
  for (Index j = q.degree; j >= 0; --j) acc = acc * t + q.coefficients(row, j);
  return acc;
}

Rat leading_coefficient(const Quasipolynomial& q) {
  const Rat lead = q.coefficients(0, q.degree);
  for (Index r = 1; r < static_cast<Index>(q.period); ++r) {
    if (q.coefficients(r, q.degree) != lead)
      throw ConstancyError("leading_coefficient: residue classes disagree");
  }
  return lead;
}

Quasipolynomial fit_dilate_series(const std::function<Int(long)>& count_at, int degree,
                                  long initial_period) {
  if (initial_period < 1)
    throw ContractError("fit_dilate_series: initial period must be positive");
  const long widen[] = {1, 2, 6};
  std::map<long, Int> cache;
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    const long period = initial_period * widen[attempt];
    CountSeries series;
    for (long r = 0; r < period; ++r) {
      for (int j = 1; j <= degree + 2; ++j) {
        const long t = r + period * j;
        auto it = cache.find(t);
        if (it == cache.end()) it = cache.emplace(t, count_at(t)).first;
        series.entries.push_back({t, it->second});
      }
    }
    std::sort(series.entries.begin(), series.entries.end(),
              [](const CountEntry& a, const CountEntry& b) { return a.t < b.t; });
    try {
      return ehrhart_fit(series, degree, period);
    } catch (const InconsistencyError&) {
      if (attempt + 1 == 3) throw;
    }
  }
  throw InconsistencyError("fit_dilate_series: no period in the ladder fit the counts");
}

}  // namespace latdense

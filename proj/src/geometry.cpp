#include "latdense/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace latdense {
namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

template <class Fn>
void for_each_combination(Index m, Index n, Fn&& fn) {
  if (n < 0 || n > m) return;
  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    Index i = n - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool satisfies_all(const std::vector<Halfspace>& hs, const RatVec& x) {
  for (const auto& h : hs) {
    if (dot(h.normal, x) > h.offset) return false;
  }
  return true;
}

// Feasible solutions of all invertible n-subsystems, sorted and deduplicated.
std::vector<RatVec> vertex_candidates(const std::vector<Halfspace>& hs, Index n) {
  std::vector<RatVec> found;
  const auto m = static_cast<Index>(hs.size());
  for_each_combination(m, n, [&](const std::vector<Index>& idx) {
    RatMat a(n, n);
    RatVec b(n);
    for (Index i = 0; i < n; ++i) {
      const auto& h = hs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      a.row(i) = h.normal.transpose();
      b(i) = h.offset;
    }
    auto x = solve_if_unique(a, b);
    if (x && satisfies_all(hs, *x)) found.push_back(*x);
  });
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

struct FaceTriangulation {
  const std::vector<RatVec>* verts = nullptr;
  std::vector<std::vector<int>> active;  // per halfspace, sorted vertex indices
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

  Index affine_rank(const std::vector<int>& face) const {
    if (face.size() <= 1) return 0;
    const RatVec& base = (*verts)[static_cast<std::size_t>(face[0])];
    RatMat d(base.size(), static_cast<Index>(face.size()) - 1);
    for (std::size_t i = 1; i < face.size(); ++i)
      d.col(static_cast<Index>(i) - 1) = (*verts)[static_cast<std::size_t>(face[i])] - base;
    return rank(d);
  }

  // Pulling triangulation: cone the first vertex over the triangulations of
  // the proper faces that avoid it. Faces are recovered as incidence
  // intersections and filtered by exact affine rank.
  const std::vector<std::vector<int>>& triangulate(const std::vector<int>& face, Index k) {
    auto it = memo.find(face);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (static_cast<Index>(face.size()) == k + 1) {
      out.push_back(face);
    } else {
      const int apex = face[0];
      std::set<std::vector<int>> subfaces;
      for (const auto& act : active) {
        std::vector<int> s;
        std::set_intersection(face.begin(), face.end(), act.begin(), act.end(),
                              std::back_inserter(s));
        if (static_cast<Index>(s.size()) < k) continue;
        if (std::binary_search(s.begin(), s.end(), apex)) continue;
        if (affine_rank(s) != k - 1) continue;
        subfaces.insert(std::move(s));
      }
      if (subfaces.empty()) throw ContractError("volume: face incidence is incomplete");
      for (const auto& s : subfaces) {
        for (const auto& t : triangulate(s, k - 1)) {
          std::vector<int> simplex;
          simplex.reserve(t.size() + 1);
          simplex.push_back(apex);
          simplex.insert(simplex.end(), t.begin(), t.end());
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo.emplace(face, std::move(out)).first->second;
  }
};

}  // namespace

Int norm_l1(const IntVec& x) {
  Int s = 0;
  for (Index i = 0; i < x.size(); ++i) s += abs(x(i));
  return s;
}

Int norm_linf(const IntVec& x) {
  Int s = 0;
  for (Index i = 0; i < x.size(); ++i) s = std::max(s, Int(abs(x(i))));
  return s;
}

Int norm_l2_squared(const IntVec& x) {
  Int s = 0;
  for (Index i = 0; i < x.size(); ++i) s += x(i) * x(i);
  return s;
}

bool within_ball(const IntVec& x, NormKind norm, long r) {
  switch (norm) {
    case NormKind::kOne:
      return norm_l1(x) <= r;
    case NormKind::kInf:
      return norm_linf(x) <= r;
    case NormKind::kTwo:
      return norm_l2_squared(x) <= Int(r) * r;
  }
  return false;
}

HPolytope ball_polytope(NormKind norm, Index dim) {
  if (dim < 1) throw DimensionError("ball_polytope: dimension must be positive");
  HPolytope p;
  p.dim = dim;
  if (norm == NormKind::kInf) {
    for (Index i = 0; i < dim; ++i) {
      RatVec n = RatVec::Zero(dim);
      n(i) = 1;
      p.halfspaces.push_back({n, Rat(1)});
      n(i) = -1;
      p.halfspaces.push_back({n, Rat(1)});
    }
  } else if (norm == NormKind::kOne) {
    for (long mask = 0; mask < (1L << dim); ++mask) {
      RatVec n(dim);
      for (Index i = 0; i < dim; ++i) n(i) = ((mask >> i) & 1) ? Rat(-1) : Rat(1);
      p.halfspaces.push_back({n, Rat(1)});
    }
  } else {
    throw UnsupportedNormError("ball_polytope: Euclidean ball is not a polytope");
  }
  return p;
}

Rat ball_volume(NormKind norm, Index dim) {
  if (dim < 1) throw DimensionError("ball_volume: dimension must be positive");
  Int two_n = Int(1) << dim;
  if (norm == NormKind::kInf) return Rat(two_n);
  if (norm == NormKind::kOne) {
    Int fact = 1;
    for (Index i = 2; i <= dim; ++i) fact *= i;
    return Rat(two_n, fact);
  }
  throw UnsupportedNormError("ball_volume: no exact volume for the Euclidean ball");
}

HPolytope cone_halfspaces(const Cone& c) {
  const Index n = c.generators.rows();
  if (c.generators.cols() != n)
    throw DimensionError("cone_halfspaces: need exactly dim generators");
  RatMat inv = inverse(c.generators);  // RankError when dependent
  HPolytope p;
  p.dim = n;
  for (Index i = 0; i < n; ++i) {
    // coordinate i in the generator basis is row i of the inverse; its
    // nonnegativity is one facet. Scale to coprime integers for stable output.
    RatVec row(n);
    for (Index j = 0; j < n; ++j) row(j) = inv(i, j);
    Int d = common_denominator(row);
    Int g = 0;
    IntVec w(n);
    for (Index j = 0; j < n; ++j) {
      w(j) = num(row(j)) * (d / den(row(j)));
      g = boost::multiprecision::gcd(g, w(j));
    }
    RatVec normal(n);
    for (Index j = 0; j < n; ++j) normal(j) = Rat(-w(j) / g);
    p.halfspaces.push_back({normal, Rat(0)});
  }
  return p;
}

HPolytope intersect(const HPolytope& a, const HPolytope& b) {
  if (a.dim != b.dim) throw DimensionError("intersect: dimensions differ");
  HPolytope p;
  p.dim = a.dim;
  p.halfspaces = a.halfspaces;
  p.halfspaces.insert(p.halfspaces.end(), b.halfspaces.begin(), b.halfspaces.end());
  return p;
}

VertexSet enumerate_vertices(const HPolytope& p) {
  if (p.dim < 1) throw DimensionError("enumerate_vertices: dimension must be positive");
  VertexSet vs;
  vs.dim = p.dim;
  vs.vertices = vertex_candidates(p.halfspaces, p.dim);
  if (static_cast<Index>(vs.vertices.size()) < p.dim + 1) {
    // Flat polytopes legitimately have few vertices; an unbounded system has
    // a nonzero recession direction. Probe it inside the unit box.
    std::vector<Halfspace> rc;
    rc.reserve(p.halfspaces.size() + 2 * static_cast<std::size_t>(p.dim));
    for (const auto& h : p.halfspaces) rc.push_back({h.normal, Rat(0)});
    for (Index i = 0; i < p.dim; ++i) {
      RatVec n = RatVec::Zero(p.dim);
      n(i) = 1;
      rc.push_back({n, Rat(1)});
      n(i) = -1;
      rc.push_back({n, Rat(1)});
    }
    for (const auto& d : vertex_candidates(rc, p.dim)) {
      bool zero = true;
      for (Index i = 0; i < p.dim && zero; ++i) zero = d(i) == 0;
      if (!zero) throw BoundednessError("enumerate_vertices: polytope is unbounded");
    }
  }
  return vs;
}

Rat volume(const VertexSet& v, const HPolytope& p) {
  const Index n = p.dim;
  if (n < 1) throw DimensionError("volume: dimension must be positive");
  if (v.dim != n) throw DimensionError("volume: vertex set dimension differs from polytope");
  const auto& verts = v.vertices;
  if (static_cast<Index>(verts.size()) < n + 1) return 0;

  FaceTriangulation tri;
  tri.verts = &verts;
  std::vector<int> all(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  if (tri.affine_rank(all) < n) return 0;

  tri.active.reserve(p.halfspaces.size());
  for (const auto& h : p.halfspaces) {
    std::vector<int> act;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (dot(h.normal, verts[i]) == h.offset) act.push_back(static_cast<int>(i));
    }
    tri.active.push_back(std::move(act));
  }

  Rat total = 0;
  for (const auto& s : tri.triangulate(all, n)) {
    RatMat edges(n, n);
    const RatVec& base = verts[static_cast<std::size_t>(s[0])];
    for (Index j = 0; j < n; ++j)
      edges.col(j) = verts[static_cast<std::size_t>(s[static_cast<std::size_t>(j) + 1])] - base;
    total += abs(det(edges));
  }
  Int fact = 1;
  for (Index i = 2; i <= n; ++i) fact *= i;
  return total / Rat(fact);
}

Int polytope_denominator(const VertexSet& v) {
  Int d = 1;
  for (const auto& x : v.vertices) d = boost::multiprecision::lcm(d, common_denominator(x));
  return d;
}

}  // namespace latdense

#include "latdense/linalg.hpp"

#include <algorithm>
#include <utility>

namespace latdense {
namespace {

// Bareiss determinant on an integer matrix, destroying its argument.
// Row swaps flip the sign; the two-by-two update divides by the previous
// pivot, which is exact because every entry is a minor of the input.
Int det_int(IntMat a) {
  const Index n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (Index p = 0; p + 1 < n; ++p) {
    Index r = p;
    while (r < n && a(r, p) == 0) ++r;
    if (r == n) return 0;
    if (r != p) {
      a.row(r).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = p + 1; i < n; ++i) {
      for (Index j = p + 1; j < n; ++j) a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
      a(i, p) = 0;
    }
    prev = a(p, p);
  }
  return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

// Full-pivot variant used for rank: column swaps do not change rank and
// let elimination continue past a zero block.
Index rank_int(IntMat a) {
  const Index m = a.rows();
  const Index k = a.cols();
  Int prev = 1;
  Index r = 0;
  for (Index p = 0; p < std::min(m, k); ++p) {
    Index pr = -1;
    Index pc = -1;
    for (Index j = p; j < k && pr < 0; ++j) {
      for (Index i = p; i < m; ++i) {
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    if (pc != p) a.col(pc).swap(a.col(p));
    if (pr != p) a.row(pr).swap(a.row(p));
    for (Index i = p + 1; i < m; ++i) {
      for (Index j = p + 1; j < k; ++j) a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
      a(i, p) = 0;
    }
    prev = a(p, p);
    ++r;
  }
  return r;
}

enum class SolveStatus { kUnique, kInconsistent, kDependent };

// Forward elimination on [a | b] with row pivoting only, then exact back
// substitution. Rows below the pivot block end up zero in all coefficient
// columns, so a nonzero augmented entry there means inconsistency.
SolveStatus solve_int(IntMat a, IntVec b, RatVec& out) {
  const Index m = a.rows();
  const Index k = a.cols();
  Int prev = 1;
  for (Index p = 0; p < k; ++p) {
    Index r = p;
    while (r < m && a(r, p) == 0) ++r;
    if (r == m) return SolveStatus::kDependent;
    if (r != p) {
      a.row(r).swap(a.row(p));
      std::swap(b(r), b(p));
    }
    for (Index i = p + 1; i < m; ++i) {
      b(i) = (b(i) * a(p, p) - a(i, p) * b(p)) / prev;
      for (Index j = p + 1; j < k; ++j) a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
      a(i, p) = 0;
    }
    prev = a(p, p);
  }
  for (Index i = k; i < m; ++i) {
    if (b(i) != 0) return SolveStatus::kInconsistent;
  }
  out.resize(k);
  for (Index i = k - 1; i >= 0; --i) {
    Rat s = Rat(b(i));
    for (Index j = i + 1; j < k; ++j) s -= Rat(a(i, j)) * out(j);
    out(i) = s / Rat(a(i, i));
  }
  return SolveStatus::kUnique;
}

Int common_denominator_mat(const RatMat& m) {
  Int d = 1;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) d = boost::multiprecision::lcm(d, den(m(i, j)));
  }
  return d;
}

IntMat scale_to_int(const RatMat& m, const Int& d) {
  IntMat out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = num(m(i, j)) * (d / den(m(i, j)));
  }
  return out;
}

IntVec scale_to_int(const RatVec& v, const Int& d) {
  IntVec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = num(v(i)) * (d / den(v(i)));
  return out;
}

SolveStatus solve_cleared(const RatMat& m, const RatVec& rhs, RatVec& out) {
  if (m.rows() != rhs.size()) throw DimensionError("solve: rhs length must match row count");
  // (d*f*m) x = (d*f*rhs) has the same solutions and integer entries.
  const Int d = common_denominator_mat(m);
  Int f = 1;
  for (Index i = 0; i < rhs.size(); ++i) f = boost::multiprecision::lcm(f, den(Rat(rhs(i) * Rat(d))));
  RatMat ms = m * Rat(d * f);
  RatVec rs = rhs * Rat(d * f);
  return solve_int(scale_to_int(ms, Int(1)), scale_to_int(rs, Int(1)), out);
}

}  // namespace

Rat det(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix must be square");
  return Rat(det_int(m));
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix must be square");
  const Int d = common_denominator_mat(m);
  Rat scaled = Rat(det_int(scale_to_int(m, d)));
  Int dn = 1;
  for (Index i = 0; i < m.rows(); ++i) dn *= d;
  return scaled / Rat(dn);
}

Index rank(const IntMat& m) { return rank_int(m); }

Index rank(const RatMat& m) { return rank_int(scale_to_int(m, common_denominator_mat(m))); }

std::optional<RatVec> solve(const IntMat& m, const RatVec& rhs) {
  RatMat mr(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) mr(i, j) = Rat(m(i, j));
  }
  return solve(mr, rhs);
}

std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs) {
  RatVec x;
  switch (solve_cleared(m, rhs, x)) {
    case SolveStatus::kUnique:
      return x;
    case SolveStatus::kInconsistent:
      return std::nullopt;
    case SolveStatus::kDependent:
      throw RankError("solve: columns are dependent");
  }
  return std::nullopt;
}

std::optional<RatVec> solve_if_unique(const RatMat& m, const RatVec& rhs) {
  if (m.rows() != m.cols()) throw DimensionError("solve_if_unique: matrix must be square");
  RatVec x;
  if (solve_cleared(m, rhs, x) == SolveStatus::kUnique) return x;
  return std::nullopt;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix must be square");
  const Index n = m.rows();
  RatMat out(n, n);
  for (Index j = 0; j < n; ++j) {
    RatVec e = RatVec::Zero(n);
    e(j) = 1;
    auto x = solve(m, e);  // throws RankError when singular
    out.col(j) = *x;
  }
  return out;
}

RatMat inverse(const IntMat& m) {
  RatMat mr(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) mr(i, j) = Rat(m(i, j));
  }
  return inverse(mr);
}

}  // namespace latdense

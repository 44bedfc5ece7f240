#include "latdense/ratset.hpp"

#include <cctype>
#include <sstream>

#include "latdense/linalg.hpp"

namespace latdense {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blanks();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_blanks();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  bool consume(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  Int integer() {
    skip_blanks();
    const int line = line_;
    const int col = col_;
    std::string digits;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      digits.push_back(src_[pos_]);
      advance();
    }
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      digits.push_back(src_[pos_]);
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError(line, col, "expected integer");
    return Int(digits);
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_blanks();
    throw ParseError(line_, col_, msg);
  }

  int line() {
    skip_blanks();
    return line_;
  }
  int column() {
    skip_blanks();
    return col_;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

IntVec parse_vector(Lexer& lx) {
  lx.expect('(', "'('");
  std::vector<Int> xs;
  xs.push_back(lx.integer());
  while (lx.consume(',')) xs.push_back(lx.integer());
  lx.expect(')', "')' or ','");
  IntVec v(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = xs[i];
  return v;
}

SimpleComponent parse_component(Lexer& lx, Index& dim) {
  const int line = lx.line();
  const int col = lx.column();
  SimpleComponent c;
  c.offset = parse_vector(lx);
  if (dim == 0) dim = c.offset.size();
  if (c.offset.size() != dim)
    throw ParseError(line, col,
                     "vector has " + std::to_string(c.offset.size()) + " coordinates, expected " +
                         std::to_string(dim));
  std::vector<IntVec> gens;
  if (lx.consume('+')) {
    lx.expect('{', "'{'");
    do {
      const int gline = lx.line();
      const int gcol = lx.column();
      IntVec g = parse_vector(lx);
      if (g.size() != dim)
        throw ParseError(gline, gcol,
                         "vector has " + std::to_string(g.size()) + " coordinates, expected " +
                             std::to_string(dim));
      gens.push_back(std::move(g));
    } while (lx.consume(','));
    lx.expect('}', "'}' or ','");
    lx.expect('*', "'*'");
  }
  c.generators = from_columns(gens, dim);
  return c;
}

void write_vector(std::ostringstream& os, const IntVec& v) {
  os << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v(i);
  }
  os << ')';
}

bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

bool cols_equal(const IntMat& m, Index a, Index b) {
  for (Index i = 0; i < m.rows(); ++i) {
    if (m(i, a) != m(i, b)) return false;
  }
  return true;
}

}  // namespace

SemiSimpleSet parse(std::string_view text) {
  Lexer lx(text);
  SemiSimpleSet s;
  if (lx.at_end()) lx.fail("empty input, expected a component");
  s.components.push_back(parse_component(lx, s.dim));
  while (lx.consume('|')) s.components.push_back(parse_component(lx, s.dim));
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return s;
}

std::string format(const SemiSimpleSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i > 0) os << " | ";
    const auto& c = s.components[i];
    write_vector(os, c.offset);
    if (c.generators.cols() > 0) {
      os << " + {";
      for (Index j = 0; j < c.generators.cols(); ++j) {
        if (j > 0) os << ',';
        write_vector(os, IntVec(c.generators.col(j)));
      }
      os << "}*";
    }
  }
  return os.str();
}

ValidationReport validate(const SemiSimpleSet& s) {
  ValidationReport report;
  report.ok = true;
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    const auto& c = s.components[ci];
    ComponentCheck check;
    check.index = ci;
    const Index k = c.generators.cols();
    for (Index j = 0; j < k; ++j) {
      if (is_zero(IntVec(c.generators.col(j))))
        check.failures.push_back("generator " + std::to_string(j + 1) + " is zero");
    }
    for (Index j = 0; j < k; ++j) {
      for (Index l = j + 1; l < k; ++l) {
        if (cols_equal(c.generators, j, l))
          check.failures.push_back("generators " + std::to_string(j + 1) + " and " +
                                   std::to_string(l + 1) + " are equal");
      }
    }
    if (rank(c.generators) < k) {
      if (check.failures.empty())
        check.failures.push_back("generators are linearly dependent");
      check.simple = false;
    } else {
      check.simple = true;
    }
    check.full_rank = check.simple && k == s.dim;
    check.lattice_determinant = 0;
    if (check.full_rank) check.lattice_determinant = abs(num(det(c.generators)));
    report.ok = report.ok && check.simple;
    report.components.push_back(std::move(check));
  }
  return report;
}

std::optional<IntVec> component_membership(const SimpleComponent& c, const IntVec& x) {
  const Index k = c.generators.cols();
  IntVec diff = x - c.offset;
  if (k == 0) {
    if (is_zero(diff)) return IntVec(0);
    return std::nullopt;
  }
  auto alpha = solve(c.generators, to_rat(diff));
  if (!alpha) return std::nullopt;
  IntVec coeff(k);
  for (Index i = 0; i < k; ++i) {
    const Rat& a = (*alpha)(i);
    if (den(a) != 1 || num(a) < 0) return std::nullopt;
    coeff(i) = num(a);
  }
  return coeff;
}

std::optional<MembershipWitness> membership(const SemiSimpleSet& s, const IntVec& x) {
  if (x.size() != s.dim) throw DimensionError("membership: point dimension differs from set");
  for (const auto& c : s.components) {
    if (rank(c.generators) < c.generators.cols())
      throw ContractError("membership: set has a non-simple component; validate first");
  }
  for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
    if (auto coeff = component_membership(s.components[ci], x))
      return MembershipWitness{ci, std::move(*coeff)};
  }
  return std::nullopt;
}

DisjointReport check_disjoint_bounded(const SemiSimpleSet& s, long radius) {
  if (radius < 0) throw ContractError("check_disjoint_bounded: radius must be nonnegative");
  for (const auto& c : s.components) {
    if (rank(c.generators) < c.generators.cols())
      throw ContractError("check_disjoint_bounded: set has a non-simple component");
  }
  DisjointReport report;
  report.radius = radius;
  const Index n = s.dim;
  IntVec x(n);
  for (Index i = 0; i < n; ++i) x(i) = -radius;
  while (true) {
    std::vector<std::size_t> owners;
    for (std::size_t ci = 0; ci < s.components.size(); ++ci) {
      if (component_membership(s.components[ci], x)) owners.push_back(ci);
    }
    if (owners.size() > 1) report.witnesses.push_back({x, std::move(owners)});
    Index i = n - 1;
    while (i >= 0 && x(i) == radius) {
      x(i) = -radius;
      --i;
    }
    if (i < 0) break;
    x(i) += 1;
  }
  report.clean = report.witnesses.empty();
  return report;
}

}  // namespace latdense

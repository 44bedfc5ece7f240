#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals used
// as Eigen scalars. Rationals are canonical by construction (lowest terms,
// positive denominator), so operator== is structural equality.

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

// Boost 1.74 probes constructor arguments as potential byte containers and
// hard-errors instead of SFINAE-ing when a type declares const_iterator as
// void. Every 2-D Eigen expression does exactly that, so convertibility
// checks inside Eigen metaprograms explode. A type with a void iterator
// cannot be a byte container; say so before the interop header runs.
#include <type_traits>
namespace boost {
namespace multiprecision {
namespace detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container<C> : public boost::false_type {};
}  // namespace detail
}  // namespace multiprecision
}  // namespace boost

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <initializer_list>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace latdense {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vec<Int>;
using RatVec = Vec<Rat>;
using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using Index = Eigen::Index;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

// cpp_int division truncates toward zero; these round toward -inf / +inf.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int rat_ceil(const Rat& q) { return ceil_div(num(q), den(q)); }

inline IntVec ivec(std::initializer_list<long> xs) {
  IntVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline RatVec rvec(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

inline IntMat from_columns(const std::vector<IntVec>& cols, Index rows) {
  IntMat m(rows, static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) m.col(j) = cols[static_cast<std::size_t>(j)];
  return m;
}

template <class Scalar>
Scalar dot(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  Scalar s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

// Smallest positive integer clearing every denominator in v.
inline Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (Index i = 0; i < v.size(); ++i) d = boost::multiprecision::lcm(d, den(v(i)));
  return d;
}

// Fixed-width decimal rendering for display next to exact values. The exact
// rational is authoritative; this is labeled approximate wherever it appears.
inline std::string decimal_string(const Rat& q, int significant = 12) {
  using Approx = boost::multiprecision::cpp_bin_float_50;
  std::ostringstream os;
  os << std::setprecision(significant) << Approx(q);
  return os.str();
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = fnv1a64(bytes);
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace latdense

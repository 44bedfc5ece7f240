#include <doctest.h>

#include "latdense/linalg.hpp"
#include "oracles.hpp"

using namespace latdense;
using oracles::im;
using oracles::rm;

namespace {

RatMat to_rat_mat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = Rat(m(i, j));
  }
  return r;
}

IntMat random_matrix(oracles::Rng& rng, Index rows, Index cols, long bound) {
  IntMat m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

}  // namespace

TEST_CASE("determinant on fixed matrices") {
  CHECK(det(im({{2, 1}, {1, 2}})) == Rat(3));
  CHECK(det(im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rat(1));
  CHECK(det(im({{1, 1}, {2, 2}})) == Rat(0));
  CHECK(det(im({{-7}})) == Rat(-7));
  CHECK(det(IntMat(0, 0)) == Rat(1));
  CHECK(det(rm({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)}})) == Rat(1, 14) - Rat(1, 15));
  CHECK_THROWS_AS(det(IntMat(2, 3)), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  oracles::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = rng.uniform(1, 4);
    const IntMat m = random_matrix(rng, n, n, 9);
    const RatMat mr = to_rat_mat(m);
    CHECK(det(m) == oracles::cofactor_det(mr));
    CHECK(det(mr) == oracles::cofactor_det(mr));
  }
}

TEST_CASE("determinant properties") {
  oracles::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform(2, 4);
    const IntMat m = random_matrix(rng, n, n, 6);
    CHECK(det(m) == det(IntMat(m.transpose())));

    IntMat swapped = m;
    swapped.row(0).swap(swapped.row(1));
    CHECK(det(swapped) == -det(m));

    IntMat scaled = m;
    for (Index j = 0; j < n; ++j) scaled(0, j) *= 5;
    CHECK(det(scaled) == Rat(5) * det(m));
  }
}

TEST_CASE("solve on fixed systems") {
  auto x = solve(im({{2, 1}, {1, 2}}), rvec({Rat(3), Rat(3)}));
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rat(1));
  CHECK((*x)(1) == Rat(1));

  // one column in dimension two: consistent only along the column
  IntMat col(2, 1);
  col(0, 0) = 1;
  col(1, 0) = 1;
  CHECK_FALSE(solve(col, rvec({Rat(1), Rat(2)})).has_value());
  auto y = solve(col, rvec({Rat(2), Rat(2)}));
  REQUIRE(y.has_value());
  CHECK((*y)(0) == Rat(2));

  CHECK_THROWS_AS(solve(im({{1, 2}, {2, 4}}), rvec({Rat(1), Rat(2)})), RankError);
}

TEST_CASE("solve recovers random coefficients") {
  oracles::Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Index n = rng.uniform(1, 4);
    const Index k = rng.uniform(1, n);
    IntMat m = random_matrix(rng, n, k, 7);
    if (rank(m) < k) continue;
    IntVec alpha(k);
    for (Index i = 0; i < k; ++i) alpha(i) = rng.uniform(-20, 20);
    const IntVec rhs = m * alpha;
    auto x = solve(m, to_rat(rhs));
    REQUIRE(x.has_value());
    for (Index i = 0; i < k; ++i) CHECK((*x)(i) == Rat(alpha(i)));
  }
}

TEST_CASE("solve_if_unique on singular systems") {
  CHECK_FALSE(solve_if_unique(to_rat_mat(im({{1, 2}, {2, 4}})), rvec({Rat(1), Rat(2)})).has_value());
  auto x = solve_if_unique(to_rat_mat(im({{2, 1}, {1, 2}})), rvec({Rat(3), Rat(3)}));
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rat(1));
  CHECK_THROWS_AS(solve_if_unique(RatMat(2, 3), rvec({Rat(0), Rat(0)})), DimensionError);
}

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(im({{2, 1}, {1, 2}})) == 2);
  CHECK(rank(im({{1, 1}, {2, 2}})) == 1);
  CHECK(rank(IntMat(3, 0)) == 0);
  CHECK(rank(im({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(im({{1, 0, 2}, {0, 1, 3}})) == 2);
}

TEST_CASE("rank properties") {
  oracles::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform(1, 4);
    const IntMat m = random_matrix(rng, n, rng.uniform(1, 4), 4);
    CHECK(rank(m) == rank(IntMat(m.transpose())));

    IntMat doubled(m.rows(), 2 * m.cols());
    doubled << m, m;
    CHECK(rank(doubled) == rank(m));

    if (m.rows() == m.cols()) CHECK((rank(m) == m.rows()) == (det(m) != 0));
  }
}

TEST_CASE("inverse") {
  oracles::Rng rng(15);
  int done = 0;
  while (done < 50) {
    const Index n = rng.uniform(1, 4);
    const IntMat m = random_matrix(rng, n, n, 6);
    if (det(m) == 0) continue;
    const RatMat inv = inverse(m);
    const RatMat prod = to_rat_mat(m) * inv;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) CHECK(prod(i, j) == (i == j ? Rat(1) : Rat(0)));
    }
    ++done;
  }
  CHECK_THROWS_AS(inverse(im({{1, 2}, {2, 4}})), RankError);
}

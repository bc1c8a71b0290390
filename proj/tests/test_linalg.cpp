#include "ginv/linalg.hpp"

#include <doctest.h>

#include <cstdint>
#include <vector>

using namespace ginv;
using namespace ginv::linalg;

namespace {

Mat<RationalField> qmat(int r, int c, std::vector<long> entries) {
  RationalField f;
  Mat<RationalField> m(r, c, f.zero());
  for (std::size_t i = 0; i < entries.size(); ++i) m.e[i] = Rational(entries[i]);
  return m;
}

Mat<PrimeField> pmat(const PrimeField& f, int r, int c, std::vector<std::uint64_t> entries) {
  Mat<PrimeField> m(r, c, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) m.e[i] = entries[i] % f.p;
  return m;
}

}  // namespace

TEST_CASE("prime field inverse satisfies a*inv(a) = 1 for every unit") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    PrimeField f{p};
    for (std::uint64_t a = 1; a < p; ++a) {
      const auto i = f.inv(a);
      CHECK(f.mul(a, i) == 1);
    }
  }
  PrimeField f7{7};
  CHECK_THROWS_AS((void)f7.inv(0), GinvError);
}

TEST_CASE("rank over the rationals") {
  RationalField f;
  CHECK(rank(f, qmat(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(f, qmat(2, 2, {1, 0, 0, 1})) == 2);
  CHECK(rank(f, qmat(2, 2, {0, 0, 0, 0})) == 0);
  CHECK(rank(f, qmat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
}

TEST_CASE("rank over GF(2) differs from the rational rank when 2 divides pivots") {
  PrimeField f{2};
  // [[1,1],[1,1]] has rank 1 over both fields; [[2,0],[0,1]] collapses mod 2.
  CHECK(rank(f, pmat(f, 2, 2, {1, 1, 1, 1})) == 1);
  CHECK(rank(f, pmat(f, 2, 2, {2, 0, 0, 1})) == 1);
}

TEST_CASE("solve_right produces the canonical least-free solution") {
  RationalField f;
  auto a = qmat(2, 2, {2, 0, 0, 0});
  auto b = qmat(2, 2, {1, 0, 0, 0});
  auto x = solve_right(f, a, b);
  REQUIRE(x.has_value());
  CHECK(eq(f, mul(f, a, *x), b));
  // free variables are pinned to zero
  CHECK(x->at(0, 0) == Rational(1, 2));
  CHECK(x->at(0, 1) == 0);
  CHECK(x->at(1, 0) == 0);
  CHECK(x->at(1, 1) == 0);

  // no solution when the column space misses b
  auto bad = solve_right(f, a, qmat(2, 2, {0, 0, 1, 0}));
  CHECK_FALSE(bad.has_value());
}

TEST_CASE("solve_left mirrors solve_right through transposition") {
  RationalField f;
  auto a = qmat(2, 2, {2, 0, 0, 0});
  auto b = qmat(2, 2, {1, 0, -1, 0});
  auto x = solve_left(f, a, b);
  REQUIRE(x.has_value());
  CHECK(eq(f, mul(f, *x, a), b));
  CHECK(x->at(0, 0) == Rational(1, 2));
  CHECK(x->at(1, 0) == Rational(-1, 2));
  CHECK(x->at(0, 1) == 0);
  CHECK(x->at(1, 1) == 0);
}

TEST_CASE("invert_unit on an exact rational matrix") {
  RationalField f;
  Mat<RationalField> m(2, 2, f.zero());
  m.at(0, 0) = Rational(3, 2);
  m.at(0, 1) = Rational(1, 2);
  m.at(1, 0) = Rational(-1, 2);
  m.at(1, 1) = Rational(1, 2);
  auto inv = invert_unit(f, m);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Rational(1, 2));
  CHECK(inv->at(0, 1) == Rational(-1, 2));
  CHECK(inv->at(1, 0) == Rational(1, 2));
  CHECK(inv->at(1, 1) == Rational(3, 2));
  CHECK(eq(f, mul(f, m, *inv), identity(f, 2)));

  CHECK_FALSE(invert_unit(f, qmat(2, 2, {1, 0, 0, 0})).has_value());
}

TEST_CASE("one_inverse satisfies a*g*a = a for a deterministic batch") {
  RationalField f;
  auto frozen = one_inverse(f, qmat(2, 2, {2, 0, 0, 0}));
  CHECK(frozen.at(0, 0) == Rational(1, 2));
  CHECK(frozen.at(0, 1) == 0);
  CHECK(frozen.at(1, 0) == 0);
  CHECK(frozen.at(1, 1) == 0);

  std::vector<std::vector<long>> samples = {
      {0, 0, 0, 0}, {1, 0, 0, 1},  {1, 2, 2, 4},  {0, 1, 0, 0},
      {1, 1, 1, 1}, {3, 1, -1, 2}, {2, 4, -1, -2}};
  for (const auto& s : samples) {
    auto a = qmat(2, 2, s);
    auto g = one_inverse(f, a);
    CHECK(eq(f, mul(f, mul(f, a, g), a), a));
  }

  PrimeField f3{3};
  for (std::uint64_t code = 0; code < 81; ++code) {
    auto a = pmat(f3, 2, 2, {code / 27 % 3, code / 9 % 3, code / 3 % 3, code % 3});
    auto g = one_inverse(f3, a);
    CHECK(eq(f3, mul(f3, mul(f3, a, g), a), a));
  }
}

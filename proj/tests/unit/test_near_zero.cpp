#include <doctest.h>

#include "polyvdw/errors.hpp"
#include "polyvdw/laws.hpp"
#include "polyvdw/near_zero.hpp"

using namespace polyvdw;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("ground ring membership") {
  GroundRing dyadic = GroundRing::dyadic(24);
  CHECK(dyadic.member(rat(1, 2)));
  CHECK(dyadic.member(rat(3, 1024)));
  CHECK_FALSE(dyadic.member(rat(1, 3)));
  CHECK_FALSE(dyadic.member(rat(0)));
  CHECK_FALSE(dyadic.member(rat(1)));
  CHECK_FALSE(dyadic.member(rat(5, 4)));

  GroundRing small = GroundRing::dyadic(3);
  CHECK(small.member(rat(7, 8)));
  CHECK_FALSE(small.member(rat(1, 16)));

  GroundRing denom = GroundRing::denominator_bound(Int(6));
  CHECK(denom.member(rat(5, 6)));
  CHECK(denom.member(rat(1, 2)));
  CHECK_FALSE(denom.member(rat(1, 4)));
  CHECK_FALSE(denom.dense());

  GroundRing all = GroundRing::all_rationals();
  CHECK(all.member(rat(355, 1130)));
  CHECK(all.dense());
}

TEST_CASE("grids enumerate members in ascending order") {
  GroundRing dyadic = GroundRing::dyadic(24);
  auto grid = dyadic.grid(8);
  CHECK(grid.size() == 255);
  CHECK(grid.front() == rat(1, 256));
  CHECK(grid.back() == rat(255, 256));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(dyadic.member(grid[i]));
    if (i > 0) CHECK(grid[i - 1] < grid[i]);
  }
  CHECK_THROWS_AS(GroundRing::dyadic(4).grid(8), ConfigError);

  auto dgrid = GroundRing::denominator_bound(Int(6)).grid(8);
  CHECK(dgrid.size() == 5);
}

TEST_CASE("dot_plus follows the partial addition rule") {
  GroundRing dyadic = GroundRing::dyadic(24);
  CHECK(dot_plus(dyadic, rat(1, 4), rat(1, 4)) == rat(1, 2));
  CHECK_FALSE(dot_plus(dyadic, rat(3, 4), rat(1, 2)).has_value());
  CHECK(dot_plus(GroundRing::denominator_bound(Int(6)), rat(1, 2), rat(1, 3)) == rat(5, 6));
  CHECK_THROWS_AS(dot_plus(dyadic, rat(1, 3), rat(1, 4)), NotInGround);
}

TEST_CASE("r_set matches the interval formula and dot_plus") {
  GroundRing dyadic = GroundRing::dyadic(24);
  CHECK(r_set_contains(dyadic, rat(1, 4), rat(1, 2)));
  CHECK_FALSE(r_set_contains(dyadic, rat(1, 4), rat(3, 4)));
  CHECK_THROWS_AS(r_set_contains(dyadic, rat(1, 3), rat(1, 4)), NotInGround);

  auto grid = dyadic.grid(5);
  for (const Rational& x : grid)
    for (const Rational& y : grid)
      CHECK(r_set_contains(dyadic, x, y) == dot_plus(dyadic, x, y).has_value());
}

TEST_CASE("sigma sums sequence terms exactly") {
  PartialSequence geo = PartialSequence::geometric(rat(1, 2), rat(1, 2));
  CHECK(geo.term(1) == rat(1, 4));
  CHECK(sigma(geo, IndexSet({1, 2})) == rat(3, 8));
  CHECK(sigma(geo, IndexSet({1})) == rat(1, 4));

  // exhaustive over F within [1..8]: strict certificate bound
  for (int mask = 1; mask < 256; ++mask) {
    std::vector<int> idx;
    for (int bit = 0; bit < 8; ++bit)
      if (mask & (1 << bit)) idx.push_back(bit + 1);
    Rational s = sigma(geo, IndexSet(idx));
    CHECK(s > 0);
    CHECK(s < geo.sum_bound());
  }
}

TEST_CASE("sequence certificates reject divergent input") {
  CHECK_THROWS_AS(PartialSequence::geometric(rat(2), rat(1, 2)), InvalidSequence);
  CHECK_THROWS_AS(PartialSequence::geometric(rat(1, 2), rat(3, 2)), InvalidSequence);
  CHECK_THROWS_AS(PartialSequence::explicit_list({rat(1, 2), rat(1, 2)}), InvalidSequence);
  CHECK_THROWS_AS(PartialSequence::explicit_list({rat(3, 2)}), InvalidSequence);
  CHECK_THROWS_AS(PartialSequence::explicit_list({}), InvalidSequence);

  PartialSequence ex = PartialSequence::explicit_list({rat(1, 4), rat(1, 8)});
  CHECK(ex.term(1) == rat(1, 4));
  CHECK(ex.term(3) == rat(0));
  CHECK(ex.sum_bound() == rat(3, 8));
}

TEST_CASE("shift adds the partial sum when defined") {
  GroundRing dyadic = GroundRing::dyadic(24);
  PartialSequence geo = PartialSequence::geometric(rat(1, 2), rat(1, 2));
  CHECK(shift(dyadic, geo, IndexSet({1, 2}), rat(1, 2)) == rat(7, 8));
  CHECK_FALSE(shift(dyadic, geo, IndexSet({1, 2}), rat(3, 4)).has_value());
  CHECK_THROWS_AS(shift(dyadic, geo, IndexSet({1}), rat(1, 3)), NotInGround);
}

TEST_CASE("pi_in_ground filters by evaluation") {
  GroundRing dyadic = GroundRing::dyadic(24);
  SymPoly half = SymPoly::single(Term(rat(1, 2), {rat(1)}, 2));
  CHECK(pi_in_ground(half, dyadic));
  SymPoly big = SymPoly::single(Term(rat(2), {rat(3), rat(5)}, 2));
  CHECK(pi_eval(big) == rat(30));
  CHECK_FALSE(pi_in_ground(big, dyadic));
  SymPoly third = SymPoly::single(Term(rat(1, 3), {rat(1)}, 2));
  CHECK_FALSE(pi_in_ground(third, dyadic));
}

TEST_CASE("symbolic shift evaluates to pi(x) + p(sigma)") {
  GroundRing dyadic = GroundRing::dyadic(24);
  PartialSequence geo = PartialSequence::geometric(rat(1, 2), rat(1, 2));
  IntPolynomial p({1, 1});  // x + x^2
  SymPoly eta = encode_poly(p, 2);
  SymPoly x = SymPoly::single(Term(rat(1, 4), {rat(1)}, 2));
  IndexSet f_set({1, 2});  // sigma = 3/8

  auto image = symbolic_shift(dyadic, geo, f_set, x, eta);
  REQUIRE(image.has_value());
  CHECK(pi_eval(*image) == rat(49, 64));
  CHECK(pi_eval(*image) == pi_eval(x) + p.eval(sigma(geo, f_set)));
}

TEST_CASE("symbolic shift rejects bad inputs and undefined results") {
  GroundRing dyadic = GroundRing::dyadic(4);
  PartialSequence geo = PartialSequence::geometric(rat(1, 2), rat(1, 2));
  SymPoly eta = encode_poly(IntPolynomial({1}), 1);

  SymPoly not_encoded = SymPoly::single(Term(rat(1), {rat(2)}, 1));
  SymPoly x = SymPoly::single(Term(rat(1, 4), {rat(1)}, 1));
  CHECK_THROWS_AS(symbolic_shift(dyadic, geo, IndexSet({1}), x, not_encoded), InvalidPolynomial);

  SymPoly outside = SymPoly::single(Term(rat(1, 3), {rat(1)}, 1));
  CHECK_THROWS_AS(symbolic_shift(dyadic, geo, IndexSet({1}), outside, eta), NotInGround);

  // 7/8 + 1/4 > 1: the shifted value leaves the ring
  SymPoly big = SymPoly::single(Term(rat(7, 8), {rat(1)}, 1));
  CHECK_FALSE(symbolic_shift(dyadic, geo, IndexSet({1}), big, eta).has_value());
}

TEST_CASE("symbolic shifts over disjoint sets compose") {
  GroundRing all = GroundRing::all_rationals();
  PartialSequence slow = PartialSequence::geometric(rat(1, 4), rat(1, 2));
  IntPolynomial p({1, 0, 2});  // x + 2x^3
  SymPoly eta = encode_poly(p, 3);
  SymPoly x = SymPoly::single(Term(rat(1, 8), {rat(1)}, 3));

  IndexSet f({1, 3}), g({2, 5});
  auto inner = symbolic_shift(all, slow, g, x, eta);
  REQUIRE(inner.has_value());
  auto composite = symbolic_shift(all, slow, f, *inner, eta);
  auto joined = symbolic_shift(all, slow, IndexSet::union_of(f, g), x, eta);
  REQUIRE(composite.has_value());
  REQUIRE(joined.has_value());
  CHECK(*composite == *joined);
}

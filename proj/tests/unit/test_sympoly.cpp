#include <doctest.h>

#include <algorithm>

#include "polyvdw/errors.hpp"
#include "polyvdw/laws.hpp"
#include "polyvdw/sympoly.hpp"

using namespace polyvdw;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

Term term(Rational head, std::vector<Rational> tail, int k = 4) {
  return Term(std::move(head), std::move(tail), k);
}

}  // namespace

TEST_CASE("normalize merges compatible groups and sorts") {
  SymPoly merged = SymPoly::normalized({term(rat(2), {rat(3)}), term(rat(2), {rat(4)})});
  CHECK(merged == SymPoly::single(term(rat(2), {rat(7)})));

  SymPoly sorted = SymPoly::normalized(
      {term(rat(2), {rat(1), rat(1)}), term(rat(1), {rat(1)})});
  CHECK(sorted.terms().front().len() == 1);
  CHECK(SymPoly::normalized(sorted.terms()) == sorted);

  CHECK_THROWS_AS(SymPoly::normalized({}), ConfigError);
}

TEST_CASE("normalize is independent of fold order") {
  std::vector<Term> group = {term(rat(2), {rat(3)}), term(rat(2), {rat(4)}),
                             term(rat(2), {rat(-7)})};
  SymPoly expected = SymPoly::single(term(rat(2), {rat(0)}));
  std::sort(group.begin(), group.end(), term_less);
  do {
    CHECK(SymPoly::normalized(group) == expected);
  } while (std::next_permutation(group.begin(), group.end(), term_less));
}

TEST_CASE("add merges matched pairs and keeps the rest") {
  SymPoly a = SymPoly::single(term(rat(2), {rat(3)}));
  SymPoly b = SymPoly::single(term(rat(2), {rat(4)}));
  CHECK(add(a, b) == SymPoly::single(term(rat(2), {rat(7)})));

  SymPoly c = SymPoly::single(term(rat(1), {rat(1)}));
  SymPoly d = SymPoly::single(term(rat(2), {rat(1), rat(1)}));
  SymPoly both = add(c, d);
  REQUIRE(both.term_count() == 2);
  CHECK(both.terms()[0] == term(rat(1), {rat(1)}));
  CHECK(both.terms()[1] == term(rat(2), {rat(1), rat(1)}));
}

TEST_CASE("add is associative and commutative on random input") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    SymPoly a = random_sympoly(rng, 4, 6);
    SymPoly b = random_sympoly(rng, 4, 6);
    SymPoly c = random_sympoly(rng, 4, 6);
    CHECK(add(a, b) == add(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    std::vector<Term> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    all.insert(all.end(), c.terms().begin(), c.terms().end());
    CHECK(add(add(a, b), c) == SymPoly::normalized(std::move(all)));
  }
}

TEST_CASE("scale applies per term and distributes") {
  std::vector<Rational> ones(4, rat(1));
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    SymPoly g = random_sympoly(rng, 4, 6);
    CHECK(scale(std::span<const Rational>(ones), g) == g);
  }

  SymPoly g = SymPoly::normalized(
      {term(rat(2), {rat(1)}), term(rat(3), {rat(1), rat(1)})});
  SymPoly scaled = scale(DiagonalScalar{rat(1, 2), 4}, g);
  CHECK(scaled == SymPoly::normalized({term(rat(2), {rat(1, 2)}),
                                       term(rat(3), {rat(1, 2), rat(1, 2)})}));

  for (int i = 0; i < 200; ++i) {
    SymPoly a = random_sympoly(rng, 4, 6);
    SymPoly b = random_sympoly(rng, 4, 6);
    Rational s = random_coefficient(rng);
    DiagonalScalar d{s, 4};
    CHECK(scale(d, add(a, b)) == add(scale(d, a), scale(d, b)));
  }
}

TEST_CASE("ir_member detects compatible clashes") {
  SymPoly g = SymPoly::single(term(rat(1), {rat(1)}));
  SymPoly eta = SymPoly::single(term(rat(2), {rat(1)}));
  CHECK(ir_member(g, eta));

  SymPoly clash = SymPoly::single(term(rat(2), {rat(9)}));
  CHECK_FALSE(ir_member(clash, eta));
}

TEST_CASE("ir sets are closed under add") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    SymPoly eta = random_sympoly(rng, 4, 6);
    SymPoly x = random_ir_partner(rng, eta, 4, 6);
    SymPoly y = random_ir_partner(rng, eta, 4, 6);
    CHECK(ir_member(add(x, y), eta));
  }
}

TEST_CASE("pi evaluates products and sums") {
  CHECK(pi_eval(SymPoly::single(term(rat(2), {rat(3), rat(5)}))) == rat(30));
  SymPoly two = SymPoly::normalized(
      {term(rat(2), {rat(3)}), term(rat(1), {rat(1), rat(1)})});
  CHECK(pi_eval(two) == rat(7));
}

TEST_CASE("pi of a compatible merge is head times slot sums") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    Term x = random_term(rng, 4);
    std::vector<Rational> other_tail;
    for (int j = 0; j < x.len(); ++j) other_tail.push_back(random_coefficient(rng));
    Term y(x.iota(), other_tail, 4);
    Rational expected = x.iota();
    for (int j = 0; j < x.len(); ++j)
      expected *= x.tail()[static_cast<std::size_t>(j)] + other_tail[static_cast<std::size_t>(j)];
    CHECK(pi_eval(SymPoly::normalized({x, y})) == expected);
  }
}

TEST_CASE("pi is additive exactly on irreducible pairs") {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    SymPoly a = random_sympoly(rng, 4, 6);
    SymPoly b = random_ir_partner(rng, a, 4, 6);
    CHECK(pi_eval(add(a, b)) == pi_eval(a) + pi_eval(b));
    CHECK(poly_image(add(a, b)) == poly_image(a) + poly_image(b));
  }
}

TEST_CASE("poly_image maps length to degree") {
  CHECK(poly_image(SymPoly::single(term(rat(3), {rat(1), rat(1)}))) ==
        RatPoly({rat(0), rat(0), rat(3)}));
  CHECK(poly_image(SymPoly::single(term(rat(2), {rat(5)}))) == RatPoly({rat(0), rat(10)}));
}

TEST_CASE("encode_poly builds unit tails and round-trips") {
  IntPolynomial p({2, 3});  // 2x + 3x^2
  SymPoly encoded = encode_poly(p, 2);
  REQUIRE(encoded.term_count() == 2);
  CHECK(encoded.terms()[0] == term(rat(2), {rat(1)}, 2));
  CHECK(encoded.terms()[1] == term(rat(3), {rat(1), rat(1)}, 2));
  CHECK(has_unit_tails(encoded));

  CHECK(encode_poly(IntPolynomial({1}), 1) == SymPoly::single(term(rat(1), {rat(1)}, 1)));
  CHECK_THROWS_AS(encode_poly(IntPolynomial({0, 0, 1}), 2), DegreeExceedsK);

  // zero coefficients are omitted
  SymPoly sparse = encode_poly(IntPolynomial({1, 0, 2}), 3);
  CHECK(sparse.term_count() == 2);

  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    IntPolynomial q = random_poly(rng, 5, -9, 9);
    CHECK(poly_image(encode_poly(q, 5)) == q.as_rat_poly());
    Rational s = make_rational(rng.range(1, 31), 32);
    CHECK(pi_eval(scale(DiagonalScalar{s, 5}, encode_poly(q, 5))) == q.eval(s));
  }
}

#include <doctest.h>

#include <algorithm>

#include "polyvdw/errors.hpp"
#include "polyvdw/laws.hpp"
#include "polyvdw/term.hpp"

using namespace polyvdw;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

Term term(Rational head, std::vector<Rational> tail, int k = 4) {
  return Term(std::move(head), std::move(tail), k);
}

}  // namespace

TEST_CASE("iota and len read the obvious fields") {
  CHECK(term(rat(2), {rat(3)}).iota() == rat(2));
  CHECK(term(rat(1, 2), {rat(0), rat(5)}).iota() == rat(1, 2));
  CHECK(term(rat(-1), {rat(1)}).iota() == rat(-1));

  CHECK(term(rat(2), {rat(3)}).len() == 1);
  CHECK(term(rat(2), {rat(3), rat(4), rat(5)}).len() == 3);
  CHECK(term(rat(1), {rat(1), rat(1), rat(1), rat(1)}, 4).len() == 4);
}

TEST_CASE("term construction validates the tail against the bound") {
  CHECK_THROWS_AS(term(rat(1), {}), ArityMismatch);
  CHECK_THROWS_AS(term(rat(1), {rat(1), rat(1)}, 1), ArityMismatch);
}

TEST_CASE("compatibility needs equal length and equal head") {
  CHECK(compatible(term(rat(2), {rat(3)}), term(rat(2), {rat(4)})));
  CHECK_FALSE(compatible(term(rat(2), {rat(3)}), term(rat(2), {rat(3), rat(1)})));
  CHECK_FALSE(compatible(term(rat(2), {rat(3)}), term(rat(5), {rat(3)})));
}

TEST_CASE("irreducible sets have no compatible pair") {
  std::vector<Term> mixed = {term(rat(2), {rat(3)}), term(rat(2), {rat(1), rat(1)})};
  CHECK(is_irreducible_set(mixed));
  std::vector<Term> clash = {term(rat(2), {rat(3)}), term(rat(2), {rat(4)})};
  CHECK_FALSE(is_irreducible_set(clash));
  std::vector<Term> single = {term(rat(2), {rat(3)})};
  CHECK(is_irreducible_set(single));
}

TEST_CASE("term order: length, then head, then tail") {
  CHECK(term_order(term(rat(1), {rat(5)}), term(rat(2), {rat(7), rat(1)})) < 0);
  CHECK(term_order(term(rat(1), {rat(5)}), term(rat(2), {rat(5)})) < 0);
  CHECK(term_order(term(rat(2), {rat(3)}), term(rat(2), {rat(4)})) < 0);
  CHECK(term_order(term(rat(2), {rat(3)}), term(rat(2), {rat(3)})) == 0);
}

TEST_CASE("term order is a total order on a random pool") {
  Rng rng(11);
  std::vector<Term> pool;
  for (int i = 0; i < 50; ++i) pool.push_back(random_term(rng, 4));
  for (const Term& a : pool)
    for (const Term& b : pool) {
      auto ab = term_order(a, b);
      auto ba = term_order(b, a);
      CHECK(((ab < 0) == (ba > 0)));
      CHECK(((ab == 0) == (a == b)));
    }
  // transitivity on a smaller slice keeps this O(n^3) check quick
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j)
      for (std::size_t l = 0; l < 20; ++l)
        if (term_order(pool[i], pool[j]) <= 0 && term_order(pool[j], pool[l]) <= 0)
          CHECK(term_order(pool[i], pool[l]) <= 0);
}

TEST_CASE("term_add merges compatible terms slotwise") {
  CHECK(term_add(term(rat(2), {rat(3)}), term(rat(2), {rat(4)})) == term(rat(2), {rat(7)}));
  Term a = term(rat(1), {rat(0), rat(1)});
  Term zero_tail = term(rat(1), {rat(0), rat(0)});
  CHECK(term_add(a, zero_tail) == a);
  CHECK(term_add(term(rat(3), {rat(1, 2)}), term(rat(3), {rat(1, 2)})) == term(rat(3), {rat(1)}));
  CHECK_THROWS_AS(term_add(term(rat(2), {rat(3)}), term(rat(5), {rat(3)})), IncompatibleTerms);
}

TEST_CASE("scale_term multiplies slots and keeps head and length") {
  std::vector<Rational> half = {rat(1, 2), rat(1, 2)};
  CHECK(scale_term(std::span<const Rational>(half), term(rat(3), {rat(1), rat(1)})) ==
        term(rat(3), {rat(1, 2), rat(1, 2)}));

  std::vector<Rational> ones = {rat(1), rat(1), rat(1), rat(1)};
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Term t = random_term(rng, 4);
    CHECK(scale_term(std::span<const Rational>(ones), t) == t);
  }

  std::vector<Rational> r = {rat(1, 4), rat(1, 16)};
  CHECK(scale_term(std::span<const Rational>(r), term(rat(2), {rat(2), rat(4)})) ==
        term(rat(2), {rat(1, 2), rat(1, 4)}));

  std::vector<Rational> too_short = {rat(1)};
  CHECK_THROWS_AS(scale_term(std::span<const Rational>(too_short), term(rat(2), {rat(1), rat(1)})),
                  ArityMismatch);
}

TEST_CASE("diagonal scalars expand to constant vectors") {
  DiagonalScalar d{rat(1, 2), 3};
  auto v = d.to_vector();
  REQUIRE(v.size() == 3);
  CHECK(std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == rat(1, 2); }));
  CHECK(scale_term(d, term(rat(3), {rat(1), rat(1)}, 3)) == term(rat(3), {rat(1, 2), rat(1, 2)}, 3));
}

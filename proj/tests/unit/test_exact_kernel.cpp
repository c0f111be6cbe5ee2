#include <doctest.h>

#include "polyvdw/errors.hpp"
#include "polyvdw/int_polynomial.hpp"
#include "polyvdw/laws.hpp"
#include "polyvdw/rational.hpp"

using namespace polyvdw;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

// Independent root finder for tests: scans p/q with small numerator and
// denominator for exact zeros and returns the least positive one.
std::optional<Rational> least_positive_rational_root(const IntPolynomial& p, int limit) {
  std::optional<Rational> best;
  for (int den = 1; den <= limit; ++den)
    for (int num = 1; num <= limit; ++num) {
      Rational candidate = rat(num, den);
      if (p.eval(candidate) == 0 && (!best || candidate < *best)) best = candidate;
    }
  return best;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/8") == rat(3, 8));
  CHECK(parse_rational("-3/8") == rat(-3, 8));
  CHECK(parse_rational("5") == rat(5));
  CHECK(parse_rational(" 7/14 ") == rat(1, 2));
  CHECK(to_string(rat(-3, 8)) == "-3/8");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("0.5"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1e-3"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ConfigError);
}

TEST_CASE("floor_rational rounds toward minus infinity") {
  CHECK(floor_rational(rat(7, 2)) == 3);
  CHECK(floor_rational(rat(-7, 2)) == -4);
  CHECK(floor_rational(rat(4)) == 4);
  CHECK(floor_rational(rat(-4)) == -4);
}

TEST_CASE("poly_eval matches the expected exact values") {
  CHECK(IntPolynomial({1}).eval(rat(3, 8)) == rat(3, 8));
  CHECK(IntPolynomial({1, 1}).eval(rat(1, 4)) == rat(5, 16));
  CHECK(IntPolynomial({0, -1, 2}).eval(rat(1, 2)) == rat(0));
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(IntPolynomial({0, 0}), InvalidPolynomial);
  CHECK_THROWS_AS(IntPolynomial({}), InvalidPolynomial);
  // trailing zeros trim away
  CHECK(IntPolynomial({1, 0}).degree() == 1);
}

TEST_CASE("sign_near_zero reads the lowest nonzero coefficient") {
  CHECK(IntPolynomial({1, -1}).sign_near_zero() == 1);     // x - x^2
  CHECK(IntPolynomial({-1, 0, 5}).sign_near_zero() == -1); // -x + 5x^3
  CHECK(IntPolynomial({0, 1}).sign_near_zero() == 1);      // x^2
}

TEST_CASE("sturm counts on x - x^2") {
  IntPolynomial p({1, -1});
  CHECK(sturm_count(p, rat(0), rat(1)) == 1);  // the root at 1 lies in (0,1]
  CHECK(sturm_count(p, rat(0), rat(1, 2)) == 0);
  CHECK(sturm_count(p, rat(0), rat(2)) == 1);
  Rational delta = p.positivity_delta();
  CHECK(delta > 0);
  CHECK(delta <= 1);
  CHECK(sturm_count(p, rat(0), delta) == 0);
}

TEST_CASE("sturm counting handles repeated roots") {
  // x(1-2x)^2 = x - 4x^2 + 4x^3: double root at 1/2 counts once.
  IntPolynomial p({1, -4, 4});
  CHECK(sturm_count(p, rat(0), rat(1)) == 1);
  CHECK(sturm_count(p, rat(0), rat(1, 4)) == 0);
}

TEST_CASE("positivity_delta certifies a positive interval") {
  CHECK(IntPolynomial({1}).positivity_delta() == 1);  // x has no positive roots

  IntPolynomial p({1, -4});  // x - 4x^2, least positive root 1/4
  auto root = least_positive_rational_root(p, 8);
  REQUIRE(root.has_value());
  CHECK(*root == rat(1, 4));
  Rational delta = p.positivity_delta();
  CHECK(delta <= rat(1, 4));
  CHECK(p.eval(delta / 2) > 0);

  CHECK_THROWS_AS(IntPolynomial({-1, 0, 5}).positivity_delta(), NotPositiveNearZero);
}

TEST_CASE("positivity_delta interval is exactly positive on samples") {
  Rng rng(2024);
  for (int round = 0; round < 20; ++round) {
    IntPolynomial p = random_poly(rng, 4, -6, 6);
    if (p.sign_near_zero() != 1) continue;
    Rational delta = p.positivity_delta();
    for (int i = 1; i <= 100; ++i) {
      Rational x = delta * rat(i, 101);
      CHECK(p.eval(x) > 0);
    }
  }
}

TEST_CASE("poly_eval denominators divide den(s)^degree") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial p = random_poly(rng, 5, -9, 9);
    Rational s = make_rational(rng.range(1, 30), rng.range(2, 30));
    Int bound = 1;
    for (int d = 0; d < p.degree(); ++d) bound *= denominator(s);
    CHECK(bound % denominator(p.eval(s)) == 0);
  }
}

TEST_CASE("rat_poly division and arithmetic") {
  // (x^2 - 1) = (x + 1)(x - 1)
  RatPoly a({Rational(-1), Rational(0), Rational(1)});
  RatPoly b({Rational(1), Rational(1)});
  auto [q, r] = RatPoly::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == RatPoly({Rational(-1), Rational(1)}));
  CHECK(a + b == RatPoly({Rational(0), Rational(1), Rational(1)}));
  CHECK(RatPoly({Rational(1)}).degree() == 0);
  CHECK(RatPoly{}.is_zero());
}

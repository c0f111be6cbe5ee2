#pragma once

#include <utility>
#include <vector>

#include "polyvdw/rational.hpp"

namespace polyvdw {

// Dense polynomial with rational coefficients; coeff(i) is the coefficient
// of x^i. Trailing zeros are trimmed, so a zero polynomial has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs_from_degree_0);

  static RatPoly monomial(Rational c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly scaled(const Rational& c) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

 private:
  std::vector<Rational> coeffs_;
};

// Nonzero integer polynomial with zero constant term, stored as coefficients
// c_1..c_d ascending from degree 1. The representation cannot express a
// constant term, which is exactly the class the search hypotheses require.
class IntPolynomial {
 public:
  // Throws InvalidPolynomial when all coefficients are zero (after trimming
  // trailing zeros so the leading coefficient is nonzero).
  explicit IntPolynomial(std::vector<Int> coeffs_from_degree_1);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  const Int& coefficient(int degree) const { return coeffs_[degree - 1]; }

  // Exact evaluation; the result's denominator divides denominator(s)^degree.
  Rational eval(const Rational& s) const;

  // Sign of p(x) as x -> 0+: the sign of the lowest-degree nonzero coefficient.
  int sign_near_zero() const;

  // A rational delta in (0,1] with p(x) > 0 for all x in (0, delta), found by
  // halving until the Sturm count of roots in (0, delta] is zero. Throws
  // NotPositiveNearZero when sign_near_zero() is -1.
  Rational positivity_delta() const;

  RatPoly as_rat_poly() const;
  std::string to_text() const;  // e.g. "x + 2x^3"

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  std::vector<Int> coeffs_;
};

// Number of distinct real roots of p in the half-open interval (a, b],
// counted with a Sturm chain of the squarefree part of p. Requires a < b.
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);

}  // namespace polyvdw

#pragma once

#include <span>
#include <vector>

#include "polyvdw/int_polynomial.hpp"
#include "polyvdw/term.hpp"

namespace polyvdw {

// A symbolic polynomial: a nonempty, pairwise-irreducible term set stored
// strictly ascending under term_order. Construction always normalizes, so
// equality on the stored vectors is set equality.
class SymPoly {
 public:
  // Groups mutually compatible terms, merges each group with term_add, and
  // sorts the resulting irreducible set. Throws ConfigError on empty input.
  static SymPoly normalized(std::vector<Term> terms);
  static SymPoly single(Term t);

  const std::vector<Term>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

 private:
  explicit SymPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

// Merge addition: matched compatible pairs merge, everything else coexists.
// Implemented as flatten-then-normalize; commutative and associative.
SymPoly add(const SymPoly& a, const SymPoly& b);

// Applies the scalar action to every term. Length and head are preserved,
// so irreducibility and order survive untouched.
SymPoly scale(std::span<const Rational> r, const SymPoly& g);
SymPoly scale(const DiagonalScalar& r, const SymPoly& g);

// True iff every term of g is irreducible against every term of every
// element of h.
bool ir_member(const SymPoly& g, std::span<const SymPoly> h);
bool ir_member(const SymPoly& g, const SymPoly& h);

// Evaluation: sum over terms of head times the product of all tail slots.
Rational pi_eval(const SymPoly& g);

// Polynomial image: a term of length i contributes (head * prod tail) x^i.
RatPoly poly_image(const SymPoly& g);

// Canonical symbolic preimage of p: one term per nonzero coefficient c_i,
// with head c_i and a tail of i ones. Throws DegreeExceedsK if degree(p) > k.
SymPoly encode_poly(const IntPolynomial& p, int k);

// True iff every tail slot of every term equals one (the encode_poly shape).
bool has_unit_tails(const SymPoly& g);

}  // namespace polyvdw

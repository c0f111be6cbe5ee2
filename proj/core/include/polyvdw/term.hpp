#pragma once

#include <compare>
#include <span>
#include <vector>

#include "polyvdw/rational.hpp"

namespace polyvdw {

// One symbolic term: a head coefficient followed by a nonempty tail of slot
// coefficients, living in an alphabet whose tails never exceed arity_bound.
// Equality is structural on head and tail; the bound is bookkeeping only.
class Term {
 public:
  // Throws ArityMismatch unless 1 <= tail.size() <= arity_bound.
  Term(Rational head, std::vector<Rational> tail, int arity_bound);

  const Rational& iota() const { return head_; }
  int len() const { return static_cast<int>(tail_.size()); }
  const std::vector<Rational>& tail() const { return tail_; }
  int arity_bound() const { return arity_bound_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.head_ == b.head_ && a.tail_ == b.tail_;
  }

 private:
  Rational head_;
  std::vector<Rational> tail_;
  int arity_bound_;
};

// Total order: by length, then head, then lexicographically on the tail.
// The tail tie-break only distinguishes compatible terms, which never occur
// together inside a normalized symbolic polynomial.
std::strong_ordering term_order(const Term& a, const Term& b);
inline bool term_less(const Term& a, const Term& b) { return term_order(a, b) < 0; }

// Compatible terms have equal length and equal head; only they merge under
// addition. Irreducible is the negation.
bool compatible(const Term& a, const Term& b);
inline bool irreducible(const Term& a, const Term& b) { return !compatible(a, b); }

// True iff no two distinct elements are compatible.
bool is_irreducible_set(std::span<const Term> terms);

// Merge of two compatible terms: head kept, tails added slot by slot.
// Throws IncompatibleTerms when the terms do not merge.
Term term_add(const Term& a, const Term& b);

// Slotwise scalar action: head kept, tail slot j multiplied by r[j-1].
// Throws ArityMismatch when r has fewer entries than the tail.
Term scale_term(std::span<const Rational> r, const Term& t);

// The k-tuple (value, value, ..., value).
struct DiagonalScalar {
  Rational value;
  int arity;

  std::vector<Rational> to_vector() const {
    return std::vector<Rational>(static_cast<std::size_t>(arity), value);
  }
};

Term scale_term(const DiagonalScalar& r, const Term& t);

}  // namespace polyvdw

#include "polyvdw/near_zero.hpp"

#include <algorithm>

#include "polyvdw/errors.hpp"

namespace polyvdw {

std::optional<Rational> dot_plus(const GroundRing& ring, const Rational& x, const Rational& y) {
  if (!ring.member(x)) throw NotInGround("dot_plus: left operand " + to_string(x) + " is not a member");
  if (!ring.member(y)) throw NotInGround("dot_plus: right operand " + to_string(y) + " is not a member");
  Rational sum = x + y;
  if (!ring.member(sum)) return std::nullopt;
  return sum;
}

bool r_set_contains(const GroundRing& ring, const Rational& x, const Rational& y) {
  if (!ring.member(x)) throw NotInGround("r_set_contains: base " + to_string(x) + " is not a member");
  return y > 0 && y < Rational(1) - x && ring.member(y);
}

Rational sigma(const PartialSequence& f, const IndexSet& indices) {
  Rational total(0);
  for (int n : indices.indices()) total += f.term(n);
  return total;
}

std::optional<Rational> shift(const GroundRing& ring, const PartialSequence& f,
                              const IndexSet& indices, const Rational& s) {
  if (!ring.member(s)) throw NotInGround("shift: base point " + to_string(s) + " is not a member");
  Rational sum = sigma(f, indices);
  if (!ring.member(sum)) return std::nullopt;
  return dot_plus(ring, s, sum);
}

bool pi_in_ground(const SymPoly& g, const GroundRing& ring) { return ring.member(pi_eval(g)); }

std::optional<SymPoly> symbolic_shift(const GroundRing& ring, const PartialSequence& f,
                                      const IndexSet& indices, const SymPoly& x,
                                      const SymPoly& eta) {
  if (!has_unit_tails(eta))
    throw InvalidPolynomial("symbolic_shift: eta must be in encoded form (unit tails)");
  if (!pi_in_ground(x, ring))
    throw NotInGround("symbolic_shift: pi(x) = " + to_string(pi_eval(x)) + " is not a member");

  int arity = 0;
  for (const Term& t : eta.terms()) arity = std::max(arity, t.arity_bound());
  SymPoly shifted = add(x, scale(DiagonalScalar{sigma(f, indices), arity}, eta));
  if (!pi_in_ground(shifted, ring)) return std::nullopt;
  return shifted;
}

}  // namespace polyvdw

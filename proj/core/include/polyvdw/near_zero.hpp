#pragma once

#include <optional>

#include "polyvdw/ground_ring.hpp"
#include "polyvdw/index_set.hpp"
#include "polyvdw/partial_sequence.hpp"
#include "polyvdw/sympoly.hpp"

namespace polyvdw {

// Partial addition on the ring trace: x + y when the sum is a member,
// nullopt otherwise. Throws NotInGround unless both arguments are members.
std::optional<Rational> dot_plus(const GroundRing& ring, const Rational& x, const Rational& y);

// Membership in the right-definedness set of x: 0 < y < 1 - x and y a
// member. Agrees with dot_plus definedness on members. Throws NotInGround
// unless x is a member.
bool r_set_contains(const GroundRing& ring, const Rational& x, const Rational& y);

// Exact finite sum of sequence terms over an index set.
Rational sigma(const PartialSequence& f, const IndexSet& indices);

// Numeric shift: s dot-plus sigma(f, F). nullopt when the partial sum leaves
// the ring or the shifted value does. Throws NotInGround unless s is a member.
std::optional<Rational> shift(const GroundRing& ring, const PartialSequence& f,
                              const IndexSet& indices, const Rational& s);

// Membership of a symbolic polynomial in the near-zero symbolic space:
// its evaluation lies in the ring.
bool pi_in_ground(const SymPoly& g, const GroundRing& ring);

// Symbolic shift: x plus eta scaled diagonally by sigma(f, F). Defined (and
// returned) exactly when the result's evaluation is a ring member.
//   - eta must be in encoded-polynomial form (unit tails): InvalidPolynomial.
//   - x must evaluate into the ring: NotInGround.
// The operator is total beyond that; compatible terms merge, which is what
// makes shift(F) after shift(G) collapse to shift(F union G). When x is
// additionally irreducible against eta, pi(result) = pi(x) + p(sigma) for
// the encoded polynomial p.
std::optional<SymPoly> symbolic_shift(const GroundRing& ring, const PartialSequence& f,
                                      const IndexSet& indices, const SymPoly& x,
                                      const SymPoly& eta);

}  // namespace polyvdw

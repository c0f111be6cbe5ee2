#pragma once

#include <string>
#include <vector>

#include "polyvdw/rational.hpp"

namespace polyvdw {

// A concrete trace of a subring of the reals on the open unit interval:
// a membership predicate plus a finite enumeration grid. All kinds are
// closed under addition whenever the sum stays in (0,1), which is what the
// partial operation relies on.
class GroundRing {
 public:
  enum class Kind { dyadic, denominator_bound, all_rationals };

  // Rationals k / 2^j with j <= max_scale, intersected with (0,1).
  static GroundRing dyadic(int max_scale);
  // Rationals whose denominator divides d, intersected with (0,1).
  static GroundRing denominator_bound(Int d);
  // Every rational in (0,1).
  static GroundRing all_rationals();

  Kind kind() const { return kind_; }
  int max_scale() const { return max_scale_; }
  const Int& bound() const { return bound_; }

  // Dense-in-(0,1) in the mathematical sense; denominator_bound is not.
  bool dense() const { return kind_ != Kind::denominator_bound; }

  bool member(const Rational& x) const;

  // Ascending members of (0,1). For dyadic and all_rationals this is the
  // grid k / 2^resolution; denominator_bound enumerates k / d and ignores
  // the resolution. Throws ConfigError when the grid would leave the ring.
  std::vector<Rational> grid(int resolution) const;

  std::string describe() const;

  friend bool operator==(const GroundRing& a, const GroundRing& b) = default;

 private:
  GroundRing(Kind kind, int max_scale, Int bound)
      : kind_(kind), max_scale_(max_scale), bound_(std::move(bound)) {}

  Kind kind_;
  int max_scale_ = 0;
  Int bound_ = 0;
};

}  // namespace polyvdw

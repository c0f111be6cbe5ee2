#pragma once

#include <vector>

#include "polyvdw/rational.hpp"

namespace polyvdw {

// A sequence into (0,1) whose total sum is certified < 1, so every finite
// partial sum stays inside (0,1).
class PartialSequence {
 public:
  enum class Kind { geometric, explicit_list };

  // term(n) = scale * ratio^n for n >= 1. Requires scale > 0, 0 < ratio < 1,
  // and scale*ratio/(1-ratio) < 1; otherwise throws InvalidSequence.
  static PartialSequence geometric(Rational scale, Rational ratio);

  // term(n) = terms[n-1] for n <= terms.size(), 0 beyond. All listed entries
  // must lie in (0,1) and sum to < 1.
  static PartialSequence explicit_list(std::vector<Rational> terms);

  Kind kind() const { return kind_; }
  Rational term(int n) const;  // n >= 1
  // Exact upper bound on the total sum; strictly below 1 by construction.
  const Rational& sum_bound() const { return sum_bound_; }
  // Number of listed entries; 0 for geometric (unbounded support).
  int explicit_length() const { return static_cast<int>(terms_.size()); }
  const Rational& scale() const { return scale_; }
  const Rational& ratio() const { return ratio_; }

 private:
  PartialSequence() = default;

  Kind kind_ = Kind::geometric;
  Rational scale_;
  Rational ratio_;
  std::vector<Rational> terms_;
  Rational sum_bound_;
};

}  // namespace polyvdw

#include "polyvdw/partial_sequence.hpp"

#include "polyvdw/errors.hpp"

namespace polyvdw {

PartialSequence PartialSequence::geometric(Rational scale, Rational ratio) {
  if (!(scale > 0)) throw InvalidSequence("geometric sequence needs scale > 0");
  if (!(ratio > 0 && ratio < 1)) throw InvalidSequence("geometric sequence needs 0 < ratio < 1");
  Rational total = scale * ratio / (Rational(1) - ratio);
  if (!(total < 1))
    throw InvalidSequence("sum certificate failed: scale*ratio/(1-ratio) = " + to_string(total) +
                          " is not < 1");
  PartialSequence s;
  s.kind_ = Kind::geometric;
  s.scale_ = std::move(scale);
  s.ratio_ = std::move(ratio);
  s.sum_bound_ = std::move(total);
  return s;
}

PartialSequence PartialSequence::explicit_list(std::vector<Rational> terms) {
  if (terms.empty()) throw InvalidSequence("explicit sequence needs at least one term");
  Rational total(0);
  for (const Rational& t : terms) {
    if (!(t > 0 && t < 1)) throw InvalidSequence("explicit sequence terms must lie in (0,1)");
    total += t;
  }
  if (!(total < 1))
    throw InvalidSequence("sum certificate failed: finite sum " + to_string(total) + " is not < 1");
  PartialSequence s;
  s.kind_ = Kind::explicit_list;
  s.terms_ = std::move(terms);
  s.sum_bound_ = std::move(total);
  return s;
}

Rational PartialSequence::term(int n) const {
  if (n < 1) throw ConfigError("sequence index must be >= 1");
  if (kind_ == Kind::explicit_list) {
    if (n > static_cast<int>(terms_.size())) return Rational(0);
    return terms_[static_cast<std::size_t>(n - 1)];
  }
  Rational v = scale_;
  for (int i = 0; i < n; ++i) v *= ratio_;
  return v;
}

}  // namespace polyvdw

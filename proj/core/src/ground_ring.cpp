#include "polyvdw/ground_ring.hpp"

#include "polyvdw/errors.hpp"

namespace polyvdw {

GroundRing GroundRing::dyadic(int max_scale) {
  if (max_scale < 1) throw ConfigError("dyadic ground needs max_scale >= 1");
  return GroundRing(Kind::dyadic, max_scale, 0);
}

GroundRing GroundRing::denominator_bound(Int d) {
  if (d < 2) throw ConfigError("denominator_bound ground needs d >= 2");
  return GroundRing(Kind::denominator_bound, 0, std::move(d));
}

GroundRing GroundRing::all_rationals() { return GroundRing(Kind::all_rationals, 0, 0); }

bool GroundRing::member(const Rational& x) const {
  if (!(x > 0 && x < 1)) return false;
  switch (kind_) {
    case Kind::all_rationals:
      return true;
    case Kind::denominator_bound:
      return bound_ % denominator(x) == 0;
    case Kind::dyadic: {
      const Int den = denominator(x);
      if ((den & (den - 1)) != 0) return false;  // not a power of two
      return den <= pow2_int(max_scale_);
    }
  }
  return false;
}

std::vector<Rational> GroundRing::grid(int resolution) const {
  if (kind_ == Kind::denominator_bound) {
    std::vector<Rational> out;
    for (Int k = 1; k < bound_; ++k) out.push_back(make_rational(k, bound_));
    return out;
  }
  if (resolution < 1) throw ConfigError("grid resolution must be >= 1");
  if (kind_ == Kind::dyadic && resolution > max_scale_)
    throw ConfigError("grid scale 2^-" + std::to_string(resolution) +
                      " is finer than the ground ring max_scale " + std::to_string(max_scale_));
  const Int den = pow2_int(resolution);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(1) << resolution);
  for (Int k = 1; k < den; ++k) out.push_back(make_rational(k, den));
  return out;
}

std::string GroundRing::describe() const {
  switch (kind_) {
    case Kind::dyadic:
      return "dyadic(max_scale=" + std::to_string(max_scale_) + "), dense";
    case Kind::denominator_bound:
      return "denominator_bound(d=" + bound_.str() + "), non-dense";
    case Kind::all_rationals:
      return "all_rationals, dense";
  }
  return "";
}

}  // namespace polyvdw

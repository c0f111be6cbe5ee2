#pragma once

#include <map>

#include "polyvdw/rational.hpp"

namespace polyvdw {

// A deterministic finite coloring of ring members. Values are only ever
// colored after ring membership has been established.
class ColoringSpec {
 public:
  enum class Kind { band, residue, table };

  // color(x) = floor(x / width) mod colors.
  static ColoringSpec band(Rational width, int colors);
  // color(x) = n mod modulus where x = n / 2^scale; x must be exactly
  // representable at that scale.
  static ColoringSpec residue(int modulus, int scale);
  // Explicit map on a finite grid; lookups off the grid throw.
  static ColoringSpec table(std::map<Rational, int> map, int colors);

  Kind kind() const { return kind_; }
  int color_count() const { return colors_; }

  // Throws ColoringNotTotal when x is outside the coloring's domain.
  int color_of(const Rational& x) const;

  const Rational& band_width() const { return band_width_; }
  int residue_scale() const { return residue_scale_; }

 private:
  ColoringSpec() = default;

  Kind kind_ = Kind::band;
  int colors_ = 2;
  Rational band_width_;
  int residue_scale_ = 0;
  std::map<Rational, int> table_;
};

}  // namespace polyvdw

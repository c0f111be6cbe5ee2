#include "polyvdw/coloring.hpp"

#include "polyvdw/errors.hpp"

namespace polyvdw {

ColoringSpec ColoringSpec::band(Rational width, int colors) {
  if (!(width > 0)) throw ConfigError("band coloring needs width > 0");
  if (colors < 1) throw ConfigError("coloring needs at least one color");
  ColoringSpec c;
  c.kind_ = Kind::band;
  c.band_width_ = std::move(width);
  c.colors_ = colors;
  return c;
}

ColoringSpec ColoringSpec::residue(int modulus, int scale) {
  if (modulus < 1) throw ConfigError("residue coloring needs modulus >= 1");
  if (scale < 0) throw ConfigError("residue coloring needs scale >= 0");
  ColoringSpec c;
  c.kind_ = Kind::residue;
  c.colors_ = modulus;
  c.residue_scale_ = scale;
  return c;
}

ColoringSpec ColoringSpec::table(std::map<Rational, int> map, int colors) {
  if (colors < 1) throw ConfigError("coloring needs at least one color");
  for (const auto& [point, color] : map)
    if (color < 0 || color >= colors)
      throw ConfigError("table coloring assigns color " + std::to_string(color) +
                        " outside [0, " + std::to_string(colors) + ")");
  ColoringSpec c;
  c.kind_ = Kind::table;
  c.colors_ = colors;
  c.table_ = std::move(map);
  return c;
}

int ColoringSpec::color_of(const Rational& x) const {
  switch (kind_) {
    case Kind::band: {
      Int cell = floor_rational(x / band_width_);
      Int r = cell % colors_;
      if (r < 0) r += colors_;
      return static_cast<int>(r);
    }
    case Kind::residue: {
      Rational scaled = x * pow2_int(residue_scale_);
      if (denominator(scaled) != 1)
        throw ColoringNotTotal("residue coloring: " + to_string(x) +
                               " is not on the 2^-" + std::to_string(residue_scale_) + " grid");
      Int r = numerator(scaled) % colors_;
      if (r < 0) r += colors_;
      return static_cast<int>(r);
    }
    case Kind::table: {
      auto it = table_.find(x);
      if (it == table_.end())
        throw ColoringNotTotal("table coloring: " + to_string(x) + " is not in the declared grid");
      return it->second;
    }
  }
  throw ColoringNotTotal("unknown coloring kind");
}

}  // namespace polyvdw

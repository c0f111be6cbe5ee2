#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/search.hpp"

namespace polyvdw {

enum class Mode { witness, jset, laws, oracle_compare, eval };

Mode mode_from_string(std::string_view name);
std::string to_string(Mode mode);

// Target set for j-set searches.
struct JsetTarget {
  enum class Kind { all, cell, none };
  Kind kind = Kind::all;
  int color = 0;  // cell kind: the coloring cell to hit
};

struct RunConfig {
  Mode mode = Mode::witness;
  GroundRing ground = GroundRing::dyadic(24);
  PartialSequence sequence =
      PartialSequence::geometric(make_rational(1, 2), make_rational(1, 2));
  std::vector<PartialSequence> sequences;  // jset mode; defaults to {sequence}
  std::vector<IntPolynomial> polynomials;
  ColoringSpec coloring = ColoringSpec::band(make_rational(1, 16), 16);
  SearchBounds bounds;
  JsetTarget target;
  std::uint64_t seed = 42;
  long long iterations = 10000;
  int arity = 0;    // k for eval and the law suites; 0 derives a default
  int workers = 1;  // CLI maps 0 to the hardware parallelism
  std::string expression;  // eval mode input
};

// Parses a config file, auto-detecting JSON vs the TOML subset from the
// extension and, failing that, the first non-space character.
RunConfig parse_config_file(const std::string& path);

enum class ConfigFormat { toml, json };
RunConfig parse_config_text(std::string_view text, ConfigFormat format);

// Fatal problems throw ConfigError; everything else lands in warnings
// (non-dense grounds, denominators that can outgrow a dyadic ring, capped
// bounds for explicit sequences).
std::vector<std::string> validate_config(RunConfig& config);

}  // namespace polyvdw

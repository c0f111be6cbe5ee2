#include "polyvdw/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polyvdw/errors.hpp"
#include "toml_lite.hpp"

namespace polyvdw {

namespace {

using nlohmann::json;

Mode mode_from_json_or(const json& j, Mode fallback) {
  if (!j.contains("mode")) return fallback;
  return mode_from_string(j.at("mode").get<std::string>());
}

Rational rational_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ConfigError(std::string(key) + " must be an integer or a rational string like \"3/8\"");
}

GroundRing ground_from_json(const json& j) {
  std::string kind = j.value("kind", "dyadic");
  if (kind == "dyadic") return GroundRing::dyadic(j.value("max_scale", 24));
  if (kind == "denominator_bound") {
    if (!j.contains("d")) throw ConfigError("denominator_bound ground needs d");
    return GroundRing::denominator_bound(Int(j.at("d").get<long long>()));
  }
  if (kind == "all_rationals") return GroundRing::all_rationals();
  throw ConfigError("unknown ground kind '" + kind +
                    "' (expected dyadic, denominator_bound, or all_rationals)");
}

PartialSequence sequence_from_json(const json& j) {
  std::string kind = j.value("kind", "geometric");
  if (kind == "geometric")
    return PartialSequence::geometric(rational_field(j, "scale"), rational_field(j, "ratio"));
  if (kind == "explicit") {
    if (!j.contains("terms")) throw ConfigError("explicit sequence needs terms");
    std::vector<Rational> terms;
    for (const auto& t : j.at("terms"))
      terms.push_back(t.is_string() ? parse_rational(t.get<std::string>())
                                    : Rational(Int(t.get<long long>())));
    return PartialSequence::explicit_list(std::move(terms));
  }
  throw ConfigError("unknown sequence kind '" + kind + "' (expected geometric or explicit)");
}

ColoringSpec coloring_from_json(const json& j) {
  std::string kind = j.value("kind", "band");
  if (kind == "band") {
    if (!j.contains("width")) throw ConfigError("band coloring needs width");
    return ColoringSpec::band(rational_field(j, "width"), j.value("colors", 2));
  }
  if (kind == "residue")
    return ColoringSpec::residue(j.value("modulus", 2), j.value("scale", 8));
  if (kind == "table") {
    int grid_scale = j.value("grid_scale", 8);
    int colors = j.value("colors", 2);
    if (!j.contains("assignments")) throw ConfigError("table coloring needs assignments");
    const auto& assignments = j.at("assignments");
    Int den = pow2_int(grid_scale);
    if (static_cast<long long>(assignments.size()) != static_cast<long long>(den) - 1)
      throw ConfigError("table coloring needs exactly 2^grid_scale - 1 assignments");
    std::map<Rational, int> map;
    Int k = 1;
    for (const auto& color : assignments) {
      map[make_rational(k, den)] = color.get<int>();
      ++k;
    }
    return ColoringSpec::table(std::move(map), colors);
  }
  throw ConfigError("unknown coloring kind '" + kind + "' (expected band, residue, or table)");
}

std::vector<IntPolynomial> polynomials_from_json(const json& j) {
  std::vector<IntPolynomial> polys;
  for (const auto& coeffs : j) {
    if (!coeffs.is_array()) throw ConfigError("each polynomial is an array of integer coefficients");
    std::vector<Int> c;
    for (const auto& v : coeffs) c.emplace_back(v.get<long long>());
    polys.emplace_back(std::move(c));
  }
  return polys;
}

JsetTarget target_from_json(const json& j) {
  JsetTarget target;
  std::string kind = j.value("kind", "all");
  if (kind == "all") {
    target.kind = JsetTarget::Kind::all;
  } else if (kind == "cell") {
    target.kind = JsetTarget::Kind::cell;
    target.color = j.value("color", 0);
  } else if (kind == "none") {
    target.kind = JsetTarget::Kind::none;
  } else {
    throw ConfigError("unknown target kind '" + kind + "' (expected all, cell, or none)");
  }
  return target;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a table/object");
  RunConfig config;
  config.mode = mode_from_json_or(j, config.mode);
  if (j.contains("ground")) config.ground = ground_from_json(j.at("ground"));
  if (j.contains("sequence")) config.sequence = sequence_from_json(j.at("sequence"));
  if (j.contains("sequences"))
    for (const auto& s : j.at("sequences")) config.sequences.push_back(sequence_from_json(s));
  if (j.contains("polynomials")) config.polynomials = polynomials_from_json(j.at("polynomials"));
  if (j.contains("coloring")) config.coloring = coloring_from_json(j.at("coloring"));
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    config.bounds.max_index = b.value("max_index", config.bounds.max_index);
    config.bounds.max_set_size = b.value("max_set_size", config.bounds.max_index);
    config.bounds.grid_scale = b.value("grid_scale", config.bounds.grid_scale);
    config.bounds.max_steps = b.value("max_steps", config.bounds.max_steps);
  }
  if (j.contains("target")) config.target = target_from_json(j.at("target"));
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("iterations")) config.iterations = j.at("iterations").get<long long>();
  if (j.contains("k")) config.arity = j.at("k").get<int>();
  if (j.contains("workers")) config.workers = j.at("workers").get<int>();
  if (j.contains("expression")) config.expression = j.at("expression").get<std::string>();
  return config;
}

int log2_ceil(const Int& value) {
  int bits = 0;
  Int v = value;
  while (v > 1) {
    v = (v + 1) / 2;
    ++bits;
  }
  return bits;
}

}  // namespace

Mode mode_from_string(std::string_view name) {
  if (name == "witness") return Mode::witness;
  if (name == "jset") return Mode::jset;
  if (name == "laws") return Mode::laws;
  if (name == "oracle-compare" || name == "oracle_compare") return Mode::oracle_compare;
  if (name == "eval") return Mode::eval;
  throw ConfigError("unknown mode '" + std::string(name) +
                    "' (expected witness, jset, laws, oracle-compare, or eval)");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::witness:
      return "witness";
    case Mode::jset:
      return "jset";
    case Mode::laws:
      return "laws";
    case Mode::oracle_compare:
      return "oracle-compare";
    case Mode::eval:
      return "eval";
  }
  return "unknown";
}

RunConfig parse_config_text(std::string_view text, ConfigFormat format) {
  if (format == ConfigFormat::json) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad JSON config: ") + e.what());
    }
    return config_from_json(j);
  }
  return config_from_json(detail::parse_toml_subset(text));
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  ConfigFormat format = ConfigFormat::toml;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    format = ConfigFormat::json;
  } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
    format = ConfigFormat::toml;
  } else {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
      format = ConfigFormat::json;
  }
  return parse_config_text(text, format);
}

std::vector<std::string> validate_config(RunConfig& config) {
  std::vector<std::string> warnings;

  if (config.bounds.max_index < 1 || config.bounds.max_set_size < 1 ||
      config.bounds.grid_scale < 1 || config.bounds.max_steps < 1)
    throw ConfigError("bounds must all be positive");
  if (config.workers < 0) throw ConfigError("workers must be >= 0");

  if (!config.ground.dense())
    warnings.push_back("ground ring " + config.ground.describe() +
                       " is not dense in (0,1); results still verify exactly");

  if (config.ground.kind() == GroundRing::Kind::dyadic &&
      config.bounds.grid_scale > config.ground.max_scale())
    throw ConfigError("bounds.grid_scale exceeds the dyadic ground max_scale");

  const bool needs_polys = config.mode == Mode::witness || config.mode == Mode::oracle_compare;
  if (needs_polys) {
    if (config.polynomials.empty())
      throw ConfigError(to_string(config.mode) + " mode needs at least one polynomial");
    for (const IntPolynomial& p : config.polynomials) {
      if (p.sign_near_zero() != 1)
        throw ConfigError("polynomial " + p.to_text() +
                          " is not positive near zero; its lowest nonzero coefficient is negative");
    }
  }

  if (config.mode == Mode::jset && config.sequences.empty())
    config.sequences.push_back(config.sequence);

  // Explicit sequences are zero beyond their prefix, and zero is never a
  // member; keep the search inside the listed support.
  auto cap_to_explicit = [&](const PartialSequence& s) {
    if (s.kind() == PartialSequence::Kind::explicit_list &&
        config.bounds.max_index > s.explicit_length()) {
      warnings.push_back("bounds.max_index capped to the explicit sequence length " +
                         std::to_string(s.explicit_length()));
      config.bounds.max_index = s.explicit_length();
      config.bounds.max_set_size = std::min(config.bounds.max_set_size, config.bounds.max_index);
    }
  };
  cap_to_explicit(config.sequence);
  for (const PartialSequence& s : config.sequences) cap_to_explicit(s);

  // Sequence values actually touched by the search must be members.
  auto check_membership = [&](const PartialSequence& s) {
    for (int n = 1; n <= config.bounds.max_index; ++n)
      if (!config.ground.member(s.term(n)))
        throw ConfigError("sequence term f(" + std::to_string(n) + ") = " + to_string(s.term(n)) +
                          " is not a ground member; lower bounds.max_index or adjust the sequence");
  };
  if (config.mode == Mode::witness || config.mode == Mode::oracle_compare)
    check_membership(config.sequence);
  if (config.mode == Mode::jset)
    for (const PartialSequence& s : config.sequences) check_membership(s);

  // Worst-case denominator scale a dyadic search can produce: the grid plus
  // degree-many products of sequence values.
  if (config.ground.kind() == GroundRing::Kind::dyadic && needs_polys) {
    int seq_scale = 0;
    if (config.sequence.kind() == PartialSequence::Kind::geometric) {
      seq_scale = log2_ceil(denominator(config.sequence.scale())) +
                  config.bounds.max_index * log2_ceil(denominator(config.sequence.ratio()));
    } else {
      Int lcm_den = 1;
      for (int n = 1; n <= config.sequence.explicit_length(); ++n)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(config.sequence.term(n)));
      seq_scale = log2_ceil(lcm_den);
    }
    int max_degree = 1;
    for (const IntPolynomial& p : config.polynomials) max_degree = std::max(max_degree, p.degree());
    int needed = std::max(config.bounds.grid_scale, max_degree * seq_scale);
    if (needed > config.ground.max_scale())
      warnings.push_back("values at deep index sets may need denominator scale up to 2^" +
                         std::to_string(needed) + ", beyond max_scale " +
                         std::to_string(config.ground.max_scale()) +
                         "; such candidates fail membership and are skipped");
  }

  if (config.mode == Mode::eval && config.expression.empty())
    throw ConfigError("eval mode needs an expression");

  if (config.mode == Mode::jset && config.target.kind == JsetTarget::Kind::cell &&
      (config.target.color < 0 || config.target.color >= config.coloring.color_count()))
    throw ConfigError("target cell color out of range");

  // Residue colorings must be total on every possible member value.
  if (config.coloring.kind() == ColoringSpec::Kind::residue &&
      (config.mode == Mode::witness || config.mode == Mode::oracle_compare ||
       (config.mode == Mode::jset && config.target.kind == JsetTarget::Kind::cell))) {
    if (config.ground.kind() == GroundRing::Kind::all_rationals)
      throw ConfigError("residue coloring is not total on all_rationals; use dyadic ground");
    if (config.ground.kind() == GroundRing::Kind::dyadic &&
        config.coloring.residue_scale() < config.ground.max_scale())
      throw ConfigError("residue coloring scale must be >= the dyadic ground max_scale");
    if (config.ground.kind() == GroundRing::Kind::denominator_bound &&
        pow2_int(config.coloring.residue_scale()) % config.ground.bound() != 0)
      throw ConfigError("residue coloring scale does not cover the denominator_bound ground");
  }

  return warnings;
}

}  // namespace polyvdw

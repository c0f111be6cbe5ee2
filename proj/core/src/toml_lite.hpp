#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

namespace polyvdw::detail {

// Parses the TOML subset the run configs use into a JSON object tree:
// comments, [section] headers, [[array-of-tables]] headers, and
// key = string | integer | boolean | array | inline table. Throws
// ConfigError with a line number on anything else.
nlohmann::json parse_toml_subset(std::string_view text);

}  // namespace polyvdw::detail

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "polyvdw/errors.hpp"
#include "polyvdw/run.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = 0;
  bool workers_set = false;
  int max_index = 0;
  int grid_scale = 0;
  int arity = 0;
  long long iterations = 0;
  bool json_output = false;
  bool text_output = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "Config file (TOML or JSON, auto-detected)");
  cmd->add_option("--seed", flags.seed, "RNG seed for the law suites")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  cmd->add_option("--workers", flags.workers, "Worker threads; 0 = hardware parallelism")
      ->each([&flags](const std::string&) { flags.workers_set = true; });
  cmd->add_option("--max-index", flags.max_index, "Largest sequence index F may use");
  cmd->add_option("--grid-scale", flags.grid_scale, "Base-point grid resolution (2^-J)");
  cmd->add_option("--k", flags.arity, "Arity bound for eval/laws");
  cmd->add_option("--iters", flags.iterations, "Iterations per law");
  auto* json_flag = cmd->add_flag("--json", flags.json_output, "Emit the JSON report");
  cmd->add_flag("--text", flags.text_output, "Emit the human-readable report (default)")
      ->excludes(json_flag);
}

// Precedence: flags > config file > defaults.
polyvdw::RunConfig build_config(const CommonFlags& flags, polyvdw::Mode mode) {
  polyvdw::RunConfig config;
  if (!flags.config_path.empty()) config = polyvdw::parse_config_file(flags.config_path);
  config.mode = mode;
  if (flags.seed_set) config.seed = flags.seed;
  if (flags.workers_set) config.workers = flags.workers;
  if (flags.max_index > 0) {
    config.bounds.max_index = flags.max_index;
    config.bounds.max_set_size = std::min(config.bounds.max_set_size, flags.max_index);
  }
  if (flags.grid_scale > 0) config.bounds.grid_scale = flags.grid_scale;
  if (flags.arity > 0) config.arity = flags.arity;
  if (flags.iterations > 0) config.iterations = flags.iterations;
  if (config.workers == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    config.workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return config;
}

int run_mode(const CommonFlags& flags, polyvdw::Mode mode, const std::string& expression = "") {
  polyvdw::RunConfig config;
  std::vector<std::string> warnings;
  try {
    config = build_config(flags, mode);
    if (!expression.empty()) config.expression = expression;
    warnings = polyvdw::validate_config(config);
  } catch (const polyvdw::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return polyvdw::kExitConfig;
  }
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  try {
    polyvdw::RunResult result = polyvdw::run(config);
    std::cout << (flags.json_output ? result.json_report : result.text_report);
    return result.exit_code;
  } catch (const polyvdw::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return polyvdw::kExitConfig;
  } catch (const polyvdw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return polyvdw::kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact witness search and certification for polynomial configurations near zero"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string expression;

  CLI::App* witness = app.add_subcommand("witness", "Search for a monochromatic configuration");
  add_common(witness, flags);

  CLI::App* jset = app.add_subcommand("jset", "Search for a common shift pattern into a target set");
  add_common(jset, flags);

  CLI::App* laws = app.add_subcommand("laws", "Run the seeded algebraic law suites");
  add_common(laws, flags);

  CLI::App* oracle =
      app.add_subcommand("oracle-compare", "Check the engine against the exhaustive oracle");
  add_common(oracle, flags);

  CLI::App* eval = app.add_subcommand("eval", "Parse a symbolic polynomial and print pi and P_x");
  eval->add_option("expression", expression, "Expression, e.g. \"2*[1] + 3*[1,1]\"")->required();
  add_common(eval, flags);

  CLI11_PARSE(app, argc, argv);

  if (witness->parsed()) return run_mode(flags, polyvdw::Mode::witness);
  if (jset->parsed()) return run_mode(flags, polyvdw::Mode::jset);
  if (laws->parsed()) return run_mode(flags, polyvdw::Mode::laws);
  if (oracle->parsed()) return run_mode(flags, polyvdw::Mode::oracle_compare);
  if (eval->parsed()) return run_mode(flags, polyvdw::Mode::eval, expression);
  return polyvdw::kExitConfig;
}

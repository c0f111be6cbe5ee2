#include "polyvdw/run.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polyvdw/errors.hpp"
#include "polyvdw/laws.hpp"
#include "polyvdw/sympoly_text.hpp"

namespace polyvdw {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json sympoly_json(const SymPoly& g) {
  ordered_json arr = ordered_json::array();
  for (const Term& t : g.terms()) {
    ordered_json item;
    item["head"] = to_string(t.iota());
    ordered_json tail = ordered_json::array();
    for (const Rational& slot : t.tail()) tail.push_back(to_string(slot));
    item["tail"] = std::move(tail);
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

ordered_json stats_json(const SearchStats& stats) {
  ordered_json j;
  j["candidates_examined"] = stats.candidates_examined;
  j["pruned"] = stats.pruned;
  j["elapsed_ms"] = stats.elapsed_ms;
  return j;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["a"] = to_string(w.a);
  j["F"] = w.f_set.indices();
  j["sigma"] = to_string(w.sigma_value);
  j["color"] = w.color;
  j["values"] = rationals_json(w.values);
  if (w.trace) {
    ordered_json trace;
    trace["x"] = sympoly_json(w.trace->x);
    ordered_json images = ordered_json::array();
    for (const SymPoly& image : w.trace->images) images.push_back(sympoly_json(image));
    trace["images"] = std::move(images);
    trace["pis"] = rationals_json(w.trace->pis);
    j["trace"] = std::move(trace);
  }
  return j;
}

std::string witness_text(const Witness& w, const std::vector<IntPolynomial>& polys) {
  std::ostringstream out;
  out << "witness:\n";
  out << "  a     = " << to_string(w.a) << "\n";
  out << "  F     = {";
  for (std::size_t i = 0; i < w.f_set.indices().size(); ++i)
    out << (i ? ", " : "") << w.f_set.indices()[i];
  out << "}\n";
  out << "  sigma = " << to_string(w.sigma_value) << "\n";
  out << "  color = " << w.color << "\n";
  for (std::size_t i = 0; i < w.values.size(); ++i)
    out << "  a + (" << polys[i].to_text() << ")(sigma) = " << to_string(w.values[i]) << "\n";
  if (w.trace) {
    out << "  trace base x = " << to_text(w.trace->x) << "\n";
    for (std::size_t i = 0; i < w.trace->images.size(); ++i)
      out << "  image " << i << " = " << to_text(w.trace->images[i])
          << "  (pi = " << to_string(w.trace->pis[i]) << ")\n";
  }
  return out.str();
}

RunResult finish(ordered_json j, std::string text, int exit_code) {
  RunResult result;
  result.exit_code = exit_code;
  result.json_report = j.dump(2) + "\n";
  result.text_report = std::move(text);
  return result;
}

RunResult run_witness(const RunConfig& config) {
  SearchResult result = find_witness(config.ground, config.polynomials, config.sequence,
                                     config.coloring, config.bounds, config.workers);
  ordered_json j;
  j["mode"] = "witness";
  j["status"] = to_string(result.status);
  std::ostringstream text;
  int exit_code = kExitNone;
  if (result.status == SearchStatus::found) {
    bool verified = verify_witness(*result.witness, config.ground, config.polynomials,
                                   config.sequence, config.coloring);
    ordered_json w = witness_json(*result.witness);
    for (auto& [key, value] : w.items()) j[key] = value;
    j["verified"] = verified;
    exit_code = verified ? kExitFound : kExitFailure;
    text << witness_text(*result.witness, config.polynomials);
    text << "verified: " << (verified ? "yes" : "NO") << "\n";
  } else {
    exit_code = result.status == SearchStatus::budget_exceeded ? kExitBudget : kExitNone;
    text << "no witness: " << to_string(result.status) << "\n";
  }
  j["stats"] = stats_json(result.stats);
  text << "candidates examined: " << result.stats.candidates_examined
       << ", pruned index sets: " << result.stats.pruned << "\n";
  return finish(std::move(j), text.str(), exit_code);
}

RunResult run_jset(const RunConfig& config) {
  std::function<bool(const Rational&)> target;
  switch (config.target.kind) {
    case JsetTarget::Kind::all:
      target = [](const Rational&) { return true; };
      break;
    case JsetTarget::Kind::none:
      target = [](const Rational&) { return false; };
      break;
    case JsetTarget::Kind::cell: {
      ColoringSpec coloring = config.coloring;
      int cell = config.target.color;
      target = [coloring, cell](const Rational& x) { return coloring.color_of(x) == cell; };
      break;
    }
  }
  JsetResult result =
      find_jset_witness(config.ground, config.sequences, target, config.bounds, config.workers);

  ordered_json j;
  j["mode"] = "jset";
  j["status"] = to_string(result.status);
  std::ostringstream text;
  int exit_code = kExitNone;
  if (result.status == SearchStatus::found) {
    const JsetWitness& w = *result.witness;
    j["a"] = to_string(w.a);
    j["F"] = w.f_set.indices();
    j["sigmas"] = rationals_json(w.sigmas);
    j["values"] = rationals_json(w.values);
    exit_code = kExitFound;
    text << "j-set witness: a = " << to_string(w.a) << ", F = {";
    for (std::size_t i = 0; i < w.f_set.indices().size(); ++i)
      text << (i ? ", " : "") << w.f_set.indices()[i];
    text << "}\n";
    for (std::size_t i = 0; i < w.values.size(); ++i)
      text << "  a + sigma_" << i << " = " << to_string(w.values[i]) << "\n";
  } else {
    exit_code = result.status == SearchStatus::budget_exceeded ? kExitBudget : kExitNone;
    text << "no j-set witness: " << to_string(result.status) << "\n";
  }
  j["stats"] = stats_json(result.stats);
  return finish(std::move(j), text.str(), exit_code);
}

RunResult run_laws(const RunConfig& config) {
  auto start = std::chrono::steady_clock::now();
  LawSuiteParams params;
  params.seed = config.seed;
  params.iterations = config.iterations;
  if (config.arity > 0) params.k = config.arity;
  std::vector<LawCheck> checks = run_all_laws(params);

  ordered_json j;
  j["mode"] = "laws";
  j["seed"] = config.seed;
  j["iterations"] = config.iterations;
  ordered_json arr = ordered_json::array();
  bool all_passed = true;
  std::ostringstream text;
  for (const LawCheck& check : checks) {
    ordered_json item;
    item["name"] = check.name;
    item["cases"] = check.cases;
    item["failures"] = check.failures;
    arr.push_back(std::move(item));
    if (check.failures > 0) all_passed = false;
    text << (check.failures == 0 ? "pass" : "FAIL") << "  " << check.name << " (" << check.cases
         << " cases, " << check.failures << " failures)\n";
  }
  j["laws"] = std::move(arr);
  j["all_passed"] = all_passed;
  ordered_json stats;
  stats["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  j["stats"] = std::move(stats);
  text << (all_passed ? "all laws passed\n" : "LAW FAILURES PRESENT\n");
  return finish(std::move(j), text.str(), all_passed ? kExitFound : kExitFailure);
}

RunResult run_oracle_compare(const RunConfig& config) {
  std::vector<Witness> all = brute_force_witnesses(config.ground, config.polynomials,
                                                   config.sequence, config.coloring, config.bounds);
  SearchResult engine = find_witness(config.ground, config.polynomials, config.sequence,
                                     config.coloring, config.bounds, config.workers);

  bool equivalent;
  if (all.empty())
    equivalent = engine.status == SearchStatus::none_in_bounds;
  else
    equivalent = engine.status == SearchStatus::found &&
                 same_configuration(*engine.witness, all.front());

  ordered_json j;
  j["mode"] = "oracle-compare";
  j["engine_status"] = to_string(engine.status);
  if (engine.witness) j["engine_witness"] = witness_json(*engine.witness);
  j["oracle_count"] = all.size();
  if (!all.empty()) j["oracle_minimum"] = witness_json(all.front());
  j["equivalent"] = equivalent;
  j["stats"] = stats_json(engine.stats);

  std::ostringstream text;
  text << "oracle witnesses in bounds: " << all.size() << "\n";
  text << "engine: " << to_string(engine.status) << "\n";
  text << "equivalent: " << (equivalent ? "yes" : "NO") << "\n";

  int exit_code = !equivalent ? kExitFailure : (all.empty() ? kExitNone : kExitFound);
  return finish(std::move(j), text.str(), exit_code);
}

RunResult run_eval(const RunConfig& config) {
  SymPoly g = config.arity > 0 ? parse_sympoly(config.expression, config.arity)
                               : parse_sympoly(config.expression);
  Rational pi = pi_eval(g);
  RatPoly image = poly_image(g);

  ordered_json j;
  j["mode"] = "eval";
  j["input"] = config.expression;
  j["canonical"] = to_text(g);
  j["sympoly"] = sympoly_json(g);
  j["pi"] = to_string(pi);
  ordered_json coeffs = ordered_json::array();
  for (int i = 1; i <= image.degree(); ++i) coeffs.push_back(to_string(image.coeff(i)));
  j["poly_image"] = std::move(coeffs);

  std::string image_text;
  for (int i = 1; i <= image.degree(); ++i) {
    if (image.coeff(i) == 0) continue;
    if (!image_text.empty()) image_text += " + ";
    image_text += to_string(image.coeff(i)) + "x";
    if (i > 1) image_text += "^" + std::to_string(i);
  }
  if (image_text.empty()) image_text = "0";

  std::ostringstream text;
  text << "canonical: " << to_text(g) << "\n";
  text << "pi = " << to_string(pi) << "\n";
  text << "P_x image = " << image_text << "\n";
  return finish(std::move(j), text.str(), kExitFound);
}

}  // namespace

RunResult run(const RunConfig& config) {
  switch (config.mode) {
    case Mode::witness:
      return run_witness(config);
    case Mode::jset:
      return run_jset(config);
    case Mode::laws:
      return run_laws(config);
    case Mode::oracle_compare:
      return run_oracle_compare(config);
    case Mode::eval:
      return run_eval(config);
  }
  throw ConfigError("unhandled mode");
}

}  // namespace polyvdw

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/near_zero.hpp"

namespace polyvdw {

struct SearchBounds {
  int max_index = 8;      // F ranges over subsets of [1..max_index]
  int max_set_size = 8;   // |F| cap
  int grid_scale = 8;     // resolution of the base-point grid
  long long max_steps = 100'000'000;  // candidate budget, not wall time
};

// Visits every nonempty F within bounds, ordered by (max F, |F|, then
// lexicographically on the ascending index list).
class IndexSetEnumerator {
 public:
  IndexSetEnumerator(int max_index, int max_set_size);
  std::optional<IndexSet> next();

 private:
  bool advance_combination();
  int max_index_;
  int max_set_size_;
  int current_max_ = 0;
  int current_size_ = 0;
  std::vector<int> combination_;  // chosen indices below current_max_
};

struct WitnessTrace {
  SymPoly x;
  std::vector<SymPoly> images;
  std::vector<Rational> pis;
};

// A certified monochromatic configuration {a + p_i(sigma)}.
struct Witness {
  Rational a;
  IndexSet f_set;
  Rational sigma_value;
  int color = 0;
  std::vector<Rational> values;
  std::optional<WitnessTrace> trace;
};

// Equality on the numeric configuration, ignoring the optional trace.
bool same_configuration(const Witness& a, const Witness& b);

struct SearchStats {
  long long candidates_examined = 0;
  long long pruned = 0;
  long long elapsed_ms = 0;
};

enum class SearchStatus { found, none_in_bounds, budget_exceeded };
std::string to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::none_in_bounds;
  std::optional<Witness> witness;
  SearchStats stats;
};

// The arity bound used when building symbolic traces: one above the largest
// degree, so a fallback base term can always dodge every encoded length.
int trace_arity(const std::vector<IntPolynomial>& polys);

// Finds the enumeration-minimal witness: F by the enumerator order, then the
// base point a ascending along the grid. F with sigma outside the certified
// positivity region (sigma >= min positivity_delta) are skipped; base points
// with a >= 1 - max p_i(sigma) cannot yield members and are cut. The result
// carries a symbolic trace and is independent of the worker count.
// Throws InvalidPolynomial unless every polynomial is positive near zero.
SearchResult find_witness(const GroundRing& ring, const std::vector<IntPolynomial>& polys,
                          const PartialSequence& f, const ColoringSpec& coloring,
                          const SearchBounds& bounds, int workers = 1);

struct JsetWitness {
  Rational a;
  IndexSet f_set;
  std::vector<Rational> sigmas;
  std::vector<Rational> values;  // a + sigma_i
};

struct JsetResult {
  SearchStatus status = SearchStatus::none_in_bounds;
  std::optional<JsetWitness> witness;
  SearchStats stats;
};

// Finds (a, F) with a in every right-definedness set R(sigma_i) and every
// shifted value a + sigma_i inside the target set. Same enumeration
// discipline and determinism guarantees as find_witness.
JsetResult find_jset_witness(const GroundRing& ring, const std::vector<PartialSequence>& fs,
                             const std::function<bool(const Rational&)>& target,
                             const SearchBounds& bounds, int workers = 1);

// Certificate checker, independent of the search path: recomputes sigma, all
// values, memberships, colors, and the symbolic trace identities.
bool verify_witness(const Witness& w, const GroundRing& ring,
                    const std::vector<IntPolynomial>& polys, const PartialSequence& f,
                    const ColoringSpec& coloring);

// Exhaustive reference: every witness within bounds, in enumeration order,
// by a naive double loop without the sigma skip or the base-point cut.
// Throws UniverseTooLarge when grid size x 2^max_index exceeds 10^6.
std::vector<Witness> brute_force_witnesses(const GroundRing& ring,
                                           const std::vector<IntPolynomial>& polys,
                                           const PartialSequence& f, const ColoringSpec& coloring,
                                           const SearchBounds& bounds);

}  // namespace polyvdw

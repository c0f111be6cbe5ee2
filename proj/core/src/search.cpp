#include "polyvdw/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "polyvdw/errors.hpp"

namespace polyvdw {

IndexSetEnumerator::IndexSetEnumerator(int max_index, int max_set_size)
    : max_index_(max_index), max_set_size_(max_set_size) {
  if (max_index < 1) throw ConfigError("max_index must be >= 1");
  if (max_set_size < 1) throw ConfigError("max_set_size must be >= 1");
}

bool IndexSetEnumerator::advance_combination() {
  // Next lexicographic (current_size_-1)-subset of [1..current_max_-1].
  int len = static_cast<int>(combination_.size());
  for (int i = len - 1; i >= 0; --i) {
    if (combination_[static_cast<std::size_t>(i)] < current_max_ - (len - i)) {
      ++combination_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < len; ++j)
        combination_[static_cast<std::size_t>(j)] = combination_[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::optional<IndexSet> IndexSetEnumerator::next() {
  while (true) {
    if (current_max_ == 0) {
      current_max_ = 1;
      current_size_ = 1;
      combination_.clear();
    } else if (!combination_.empty() && advance_combination()) {
      // advanced within the same (max, size) block
    } else if (current_size_ < std::min(current_max_, max_set_size_)) {
      ++current_size_;
      combination_.resize(static_cast<std::size_t>(current_size_ - 1));
      for (int i = 0; i < current_size_ - 1; ++i) combination_[static_cast<std::size_t>(i)] = i + 1;
    } else if (current_max_ < max_index_) {
      ++current_max_;
      current_size_ = 1;
      combination_.clear();
    } else {
      return std::nullopt;
    }
    std::vector<int> indices = combination_;
    indices.push_back(current_max_);
    return IndexSet(std::move(indices));
  }
}

bool same_configuration(const Witness& a, const Witness& b) {
  return a.a == b.a && a.f_set == b.f_set && a.sigma_value == b.sigma_value &&
         a.color == b.color && a.values == b.values;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_in_bounds:
      return "none_in_bounds";
    case SearchStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

int trace_arity(const std::vector<IntPolynomial>& polys) {
  int max_degree = 1;
  for (const IntPolynomial& p : polys) max_degree = std::max(max_degree, p.degree());
  return max_degree + 1;
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

constexpr long long kNoIndex = std::numeric_limits<long long>::max();

// Per-F bookkeeping. Records for F past the eventual winner are excluded
// from the reported stats, which keeps reports byte-identical across worker
// counts: everything before the winner is always fully processed.
struct FRecord {
  bool completed = false;
  bool pruned = false;
  long long candidates = 0;
  std::optional<Witness> hit;
  std::optional<JsetWitness> jset_hit;
};

struct SharedSearch {
  std::mutex mu;
  IndexSetEnumerator enumerator;
  long long issued = 0;
  std::vector<FRecord> records;
  std::atomic<long long> best_index{kNoIndex};
  std::atomic<long long> steps{0};
  std::atomic<bool> budget_hit{false};

  SharedSearch(int max_index, int max_set_size) : enumerator(max_index, max_set_size) {}

  std::optional<std::pair<long long, IndexSet>> pull() {
    std::lock_guard<std::mutex> lock(mu);
    if (budget_hit.load()) return std::nullopt;
    auto f = enumerator.next();
    if (!f) return std::nullopt;
    records.emplace_back();
    return std::make_pair(issued++, std::move(*f));
  }

  void store(long long index, FRecord record) {
    std::lock_guard<std::mutex> lock(mu);
    records[static_cast<std::size_t>(index)] = std::move(record);
  }

  void offer_best(long long index) {
    long long seen = best_index.load();
    while (index < seen && !best_index.compare_exchange_weak(seen, index)) {
    }
  }

  bool charge_step(long long max_steps) {
    if (steps.fetch_add(1) + 1 > max_steps) {
      budget_hit.store(true);
      return false;
    }
    return true;
  }
};

// Runs `body(index, F, record)` over the F space with the deterministic
// minimal-index reduction; body returns true when it found a hit for its F.
template <typename Body>
void drive_workers(SharedSearch& shared, int workers, const Body& body) {
  auto work = [&shared, &body] {
    while (true) {
      auto job = shared.pull();
      if (!job) break;
      auto [index, f_set] = std::move(*job);
      FRecord record;
      if (index > shared.best_index.load()) {
        // Past a confirmed candidate; leave the record incomplete. It can
        // never participate in the reduction or the reported stats.
        shared.store(index, std::move(record));
        continue;
      }
      if (body(index, f_set, record)) shared.offer_best(index);
      shared.store(index, std::move(record));
    }
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

// Stats over the deterministic prefix: every F strictly before the winner,
// plus the winner's own partial scan.
SearchStats reduce_stats(const std::vector<FRecord>& records, long long winner) {
  SearchStats stats;
  for (long long i = 0; i < static_cast<long long>(records.size()); ++i) {
    if (winner != kNoIndex && i > winner) break;
    const FRecord& r = records[static_cast<std::size_t>(i)];
    stats.candidates_examined += r.candidates;
    if (r.pruned) ++stats.pruned;
  }
  return stats;
}

bool prefix_complete(const std::vector<FRecord>& records, long long end) {
  for (long long i = 0; i < end && i < static_cast<long long>(records.size()); ++i)
    if (!records[static_cast<std::size_t>(i)].completed) return false;
  return true;
}

SymPoly make_trace_base(const Rational& a, const std::vector<SymPoly>& etas, int arity) {
  // A single term with head a and tail [1] evaluates to a. If some encoded
  // polynomial already owns a length-1 term with head a, fall back to a tail
  // of `arity` ones, a length no encoded term uses.
  bool collides = false;
  for (const SymPoly& eta : etas)
    for (const Term& t : eta.terms())
      if (t.len() == 1 && t.iota() == a) collides = true;
  std::size_t tail_len = collides ? static_cast<std::size_t>(arity) : 1;
  return SymPoly::single(Term(a, std::vector<Rational>(tail_len, Rational(1)), arity));
}

WitnessTrace make_trace(const GroundRing& ring, const std::vector<IntPolynomial>& polys,
                        const PartialSequence& f, const IndexSet& f_set, const Rational& a) {
  int arity = trace_arity(polys);
  std::vector<SymPoly> etas;
  etas.reserve(polys.size());
  for (const IntPolynomial& p : polys) etas.push_back(encode_poly(p, arity));

  WitnessTrace trace{make_trace_base(a, etas, arity), {}, {}};
  if (!ir_member(trace.x, std::span<const SymPoly>(etas)))
    throw NotIrreducible("trace base shares a compatible term with an encoded polynomial");
  for (const SymPoly& eta : etas) {
    auto image = symbolic_shift(ring, f, f_set, trace.x, eta);
    if (!image) throw Error("internal: trace image left the ground ring");
    trace.pis.push_back(pi_eval(*image));
    trace.images.push_back(std::move(*image));
  }
  return trace;
}

void validate_polynomials(const std::vector<IntPolynomial>& polys) {
  if (polys.empty()) throw InvalidPolynomial("witness search needs at least one polynomial");
  for (const IntPolynomial& p : polys)
    if (p.sign_near_zero() != 1)
      throw InvalidPolynomial("polynomial is not positive near zero: " + p.to_text());
}

}  // namespace

SearchResult find_witness(const GroundRing& ring, const std::vector<IntPolynomial>& polys,
                          const PartialSequence& f, const ColoringSpec& coloring,
                          const SearchBounds& bounds, int workers) {
  auto start = Clock::now();
  validate_polynomials(polys);

  Rational delta_min(1);
  for (const IntPolynomial& p : polys) delta_min = std::min(delta_min, p.positivity_delta());
  const std::vector<Rational> grid = ring.grid(bounds.grid_scale);

  SharedSearch shared(bounds.max_index, bounds.max_set_size);
  drive_workers(shared, workers, [&](long long index, const IndexSet& f_set, FRecord& record) {
    Rational sig = sigma(f, f_set);
    if (!(sig < delta_min)) {
      record.pruned = true;
      record.completed = true;
      return false;
    }
    std::vector<Rational> shifts;
    shifts.reserve(polys.size());
    Rational max_shift(0);
    for (const IntPolynomial& p : polys) {
      shifts.push_back(p.eval(sig));
      max_shift = std::max(max_shift, shifts.back());
    }
    const Rational a_limit = Rational(1) - max_shift;
    for (const Rational& a : grid) {
      if (!(a < a_limit)) break;
      if (!shared.charge_step(bounds.max_steps)) return false;
      ++record.candidates;
      std::vector<Rational> values;
      values.reserve(shifts.size());
      bool all_members = true;
      for (const Rational& s : shifts) {
        values.push_back(a + s);
        if (!ring.member(values.back())) {
          all_members = false;
          break;
        }
      }
      if (!all_members) continue;
      int color = coloring.color_of(values.front());
      bool mono = true;
      for (const Rational& v : values)
        if (coloring.color_of(v) != color) {
          mono = false;
          break;
        }
      if (!mono) continue;
      record.hit = Witness{a, f_set, sig, color, std::move(values), std::nullopt};
      record.completed = true;
      return true;
    }
    record.completed = true;
    return false;
  });

  SearchResult result;
  long long winner = kNoIndex;
  for (long long i = 0; i < static_cast<long long>(shared.records.size()); ++i)
    if (shared.records[static_cast<std::size_t>(i)].hit) {
      winner = i;
      break;
    }

  if (winner != kNoIndex && prefix_complete(shared.records, winner)) {
    result.status = SearchStatus::found;
    result.witness = std::move(shared.records[static_cast<std::size_t>(winner)].hit);
    result.witness->trace = make_trace(ring, polys, f, result.witness->f_set, result.witness->a);
    result.stats = reduce_stats(shared.records, winner);
  } else if (shared.budget_hit.load()) {
    result.status = SearchStatus::budget_exceeded;
    result.stats = reduce_stats(shared.records, kNoIndex);
  } else {
    result.status = SearchStatus::none_in_bounds;
    result.stats = reduce_stats(shared.records, kNoIndex);
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

JsetResult find_jset_witness(const GroundRing& ring, const std::vector<PartialSequence>& fs,
                             const std::function<bool(const Rational&)>& target,
                             const SearchBounds& bounds, int workers) {
  auto start = Clock::now();
  if (fs.empty()) throw InvalidSequence("j-set search needs at least one sequence");
  const std::vector<Rational> grid = ring.grid(bounds.grid_scale);

  SharedSearch shared(bounds.max_index, bounds.max_set_size);
  drive_workers(shared, workers, [&](long long index, const IndexSet& f_set, FRecord& record) {
    std::vector<Rational> sigmas;
    sigmas.reserve(fs.size());
    Rational max_sigma(0);
    bool sigmas_ok = true;
    for (const PartialSequence& f : fs) {
      sigmas.push_back(sigma(f, f_set));
      if (!ring.member(sigmas.back())) sigmas_ok = false;
      max_sigma = std::max(max_sigma, sigmas.back());
    }
    if (!sigmas_ok) {
      record.pruned = true;
      record.completed = true;
      return false;
    }
    const Rational a_limit = Rational(1) - max_sigma;
    for (const Rational& a : grid) {
      if (!(a < a_limit)) break;
      if (!shared.charge_step(bounds.max_steps)) return false;
      ++record.candidates;
      std::vector<Rational> values;
      values.reserve(sigmas.size());
      bool ok = true;
      for (const Rational& s : sigmas) {
        values.push_back(a + s);
        if (!ring.member(values.back()) || !target(values.back())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      record.jset_hit = JsetWitness{a, f_set, sigmas, std::move(values)};
      record.completed = true;
      return true;
    }
    record.completed = true;
    return false;
  });

  JsetResult result;
  long long winner = kNoIndex;
  for (long long i = 0; i < static_cast<long long>(shared.records.size()); ++i)
    if (shared.records[static_cast<std::size_t>(i)].jset_hit) {
      winner = i;
      break;
    }

  if (winner != kNoIndex && prefix_complete(shared.records, winner)) {
    result.status = SearchStatus::found;
    result.witness = std::move(shared.records[static_cast<std::size_t>(winner)].jset_hit);
    result.stats = reduce_stats(shared.records, winner);
  } else if (shared.budget_hit.load()) {
    result.status = SearchStatus::budget_exceeded;
    result.stats = reduce_stats(shared.records, kNoIndex);
  } else {
    result.status = SearchStatus::none_in_bounds;
    result.stats = reduce_stats(shared.records, kNoIndex);
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

bool verify_witness(const Witness& w, const GroundRing& ring,
                    const std::vector<IntPolynomial>& polys, const PartialSequence& f,
                    const ColoringSpec& coloring) {
  try {
    if (polys.empty() || w.values.size() != polys.size()) return false;
    if (!ring.member(w.a)) return false;
    if (sigma(f, w.f_set) != w.sigma_value) return false;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      Rational expected = w.a + polys[i].eval(w.sigma_value);
      if (w.values[i] != expected) return false;
      if (!ring.member(w.values[i])) return false;
      if (coloring.color_of(w.values[i]) != w.color) return false;
    }
    if (w.trace) {
      const WitnessTrace& trace = *w.trace;
      if (trace.images.size() != polys.size() || trace.pis.size() != polys.size()) return false;
      if (pi_eval(trace.x) != w.a) return false;
      int arity = trace_arity(polys);
      for (std::size_t i = 0; i < polys.size(); ++i) {
        SymPoly eta = encode_poly(polys[i], arity);
        if (!ir_member(trace.x, eta)) return false;
        auto image = symbolic_shift(ring, f, w.f_set, trace.x, eta);
        if (!image) return false;
        if (!(*image == trace.images[i])) return false;
        if (pi_eval(trace.images[i]) != trace.pis[i]) return false;
        if (trace.pis[i] != w.values[i]) return false;
      }
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Witness> brute_force_witnesses(const GroundRing& ring,
                                           const std::vector<IntPolynomial>& polys,
                                           const PartialSequence& f, const ColoringSpec& coloring,
                                           const SearchBounds& bounds) {
  validate_polynomials(polys);
  const std::vector<Rational> grid = ring.grid(bounds.grid_scale);
  if (bounds.max_index > 40 ||
      static_cast<unsigned long long>(grid.size()) * (1ull << bounds.max_index) > 1'000'000ull)
    throw UniverseTooLarge("brute-force universe exceeds 10^6 candidates");

  std::vector<Witness> witnesses;
  IndexSetEnumerator enumerator(bounds.max_index, bounds.max_set_size);
  while (auto f_set = enumerator.next()) {
    Rational sig = sigma(f, *f_set);
    std::vector<Rational> shifts;
    for (const IntPolynomial& p : polys) shifts.push_back(p.eval(sig));
    for (const Rational& a : grid) {
      std::vector<Rational> values;
      bool all_members = true;
      for (const Rational& s : shifts) {
        values.push_back(a + s);
        if (!ring.member(values.back())) {
          all_members = false;
          break;
        }
      }
      if (!all_members) continue;
      int color = coloring.color_of(values.front());
      bool mono = true;
      for (const Rational& v : values)
        if (coloring.color_of(v) != color) {
          mono = false;
          break;
        }
      if (!mono) continue;
      witnesses.push_back(Witness{a, *f_set, sig, color, std::move(values), std::nullopt});
    }
  }
  return witnesses;
}

}  // namespace polyvdw

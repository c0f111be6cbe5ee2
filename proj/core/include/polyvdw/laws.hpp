#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyvdw/near_zero.hpp"

namespace polyvdw {

// Deterministic generator for the law suites. Avoids std:: distributions so
// that a (seed, iteration) pair reproduces across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Numerator from {-9..9}, denominator from {1,2,4}.
Rational random_coefficient(Rng& rng);
// Tail length 1..k, head and slots from random_coefficient.
Term random_term(Rng& rng, int k);
// Normalization of 1..max_terms random terms.
SymPoly random_sympoly(Rng& rng, int k, int max_terms);
// A sympoly irreducible against base, by rejection sampling.
SymPoly random_ir_partner(Rng& rng, const SymPoly& base, int k, int max_terms);
// Degree 1..max_degree, coefficients in [min_coeff, max_coeff], leading nonzero.
IntPolynomial random_poly(Rng& rng, int max_degree, int min_coeff, int max_coeff);

struct LawCheck {
  std::string name;
  long long cases = 0;
  long long failures = 0;
};

struct LawSuiteParams {
  std::uint64_t seed = 42;
  long long iterations = 10000;
  int k = 4;
  int max_terms = 6;
};

// Seeded property suites over the term alphabet, the symbolic polynomial
// space, and the near-zero layer. Zero failures everywhere is the pass
// condition; counts are reported per law.
std::vector<LawCheck> run_term_laws(const LawSuiteParams& params);
std::vector<LawCheck> run_sympoly_laws(const LawSuiteParams& params);
std::vector<LawCheck> run_near_zero_laws(const LawSuiteParams& params);
std::vector<LawCheck> run_all_laws(const LawSuiteParams& params);

}  // namespace polyvdw

#include "polyvdw/term.hpp"

#include <algorithm>

#include "polyvdw/errors.hpp"

namespace polyvdw {

Term::Term(Rational head, std::vector<Rational> tail, int arity_bound)
    : head_(std::move(head)), tail_(std::move(tail)), arity_bound_(arity_bound) {
  if (tail_.empty()) throw ArityMismatch("term tail must be nonempty");
  if (arity_bound_ < 1 || static_cast<int>(tail_.size()) > arity_bound_)
    throw ArityMismatch("term tail length " + std::to_string(tail_.size()) +
                        " exceeds arity bound " + std::to_string(arity_bound_));
}

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering term_order(const Term& a, const Term& b) {
  if (a.len() != b.len()) return a.len() <=> b.len();
  if (auto c = cmp(a.iota(), b.iota()); c != 0) return c;
  for (int i = 0; i < a.len(); ++i)
    if (auto c = cmp(a.tail()[static_cast<std::size_t>(i)], b.tail()[static_cast<std::size_t>(i)]); c != 0)
      return c;
  return std::strong_ordering::equal;
}

bool compatible(const Term& a, const Term& b) {
  return a.len() == b.len() && a.iota() == b.iota();
}

bool is_irreducible_set(std::span<const Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (compatible(terms[i], terms[j])) return false;
  return true;
}

Term term_add(const Term& a, const Term& b) {
  if (!compatible(a, b))
    throw IncompatibleTerms("terms with different length or head do not merge");
  std::vector<Rational> tail = a.tail();
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] += b.tail()[i];
  return Term(a.iota(), std::move(tail), std::max(a.arity_bound(), b.arity_bound()));
}

Term scale_term(std::span<const Rational> r, const Term& t) {
  if (static_cast<int>(r.size()) < t.len())
    throw ArityMismatch("scalar vector of length " + std::to_string(r.size()) +
                        " is shorter than a tail of length " + std::to_string(t.len()));
  std::vector<Rational> tail = t.tail();
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] *= r[i];
  return Term(t.iota(), std::move(tail), t.arity_bound());
}

Term scale_term(const DiagonalScalar& r, const Term& t) {
  auto v = r.to_vector();
  return scale_term(std::span<const Rational>(v), t);
}

}  // namespace polyvdw

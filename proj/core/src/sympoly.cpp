#include "polyvdw/sympoly.hpp"

#include <algorithm>

#include "polyvdw/errors.hpp"

namespace polyvdw {

SymPoly SymPoly::normalized(std::vector<Term> terms) {
  if (terms.empty()) throw ConfigError("a symbolic polynomial needs at least one term");
  // Sorting puts compatible terms (equal length and head) next to each other.
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && compatible(out.back(), t))
      out.back() = term_add(out.back(), t);
    else
      out.push_back(std::move(t));
  }
  return SymPoly(std::move(out));
}

SymPoly SymPoly::single(Term t) { return SymPoly(std::vector<Term>{std::move(t)}); }

SymPoly add(const SymPoly& a, const SymPoly& b) {
  std::vector<Term> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return SymPoly::normalized(std::move(all));
}

SymPoly scale(std::span<const Rational> r, const SymPoly& g) {
  std::vector<Term> out;
  out.reserve(g.terms().size());
  for (const Term& t : g.terms()) out.push_back(scale_term(r, t));
  return SymPoly::normalized(std::move(out));
}

SymPoly scale(const DiagonalScalar& r, const SymPoly& g) {
  auto v = r.to_vector();
  return scale(std::span<const Rational>(v), g);
}

bool ir_member(const SymPoly& g, std::span<const SymPoly> h) {
  for (const SymPoly& eta : h)
    for (const Term& u : eta.terms())
      for (const Term& t : g.terms())
        if (compatible(t, u)) return false;
  return true;
}

bool ir_member(const SymPoly& g, const SymPoly& h) {
  return ir_member(g, std::span<const SymPoly>(&h, 1));
}

Rational pi_eval(const SymPoly& g) {
  Rational total(0);
  for (const Term& t : g.terms()) {
    Rational prod = t.iota();
    for (const Rational& slot : t.tail()) prod *= slot;
    total += prod;
  }
  return total;
}

RatPoly poly_image(const SymPoly& g) {
  RatPoly image;
  for (const Term& t : g.terms()) {
    Rational prod = t.iota();
    for (const Rational& slot : t.tail()) prod *= slot;
    image = image + RatPoly::monomial(std::move(prod), t.len());
  }
  return image;
}

SymPoly encode_poly(const IntPolynomial& p, int k) {
  if (p.degree() > k)
    throw DegreeExceedsK("polynomial degree " + std::to_string(p.degree()) +
                         " exceeds arity bound " + std::to_string(k));
  std::vector<Term> terms;
  for (int i = 1; i <= p.degree(); ++i) {
    const Int& c = p.coefficient(i);
    if (c == 0) continue;
    terms.emplace_back(Rational(c), std::vector<Rational>(static_cast<std::size_t>(i), Rational(1)), k);
  }
  return SymPoly::normalized(std::move(terms));
}

bool has_unit_tails(const SymPoly& g) {
  for (const Term& t : g.terms())
    for (const Rational& slot : t.tail())
      if (slot != 1) return false;
  return true;
}

}  // namespace polyvdw

#include "polyvdw/int_polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "polyvdw/errors.hpp"

namespace polyvdw {

namespace {

void trim_trailing_zeros(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs_from_degree_0) : coeffs_(std::move(coeffs_from_degree_0)) {
  trim_trailing_zeros(coeffs_);
}

RatPoly RatPoly::monomial(Rational c, int degree) {
  if (c == 0) return RatPoly{};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return RatPoly(std::move(v));
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<int>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  if (c == 0) return RatPoly{};
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
  assert(!b.is_zero());
  std::vector<Rational> rem = a.coeffs_;
  trim_trailing_zeros(rem);
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 < db) return {RatPoly{}, RatPoly(std::move(rem))};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db), Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int dr = static_cast<int>(rem.size()) - 1;
    Rational factor = rem.back() / b.leading();
    quot[static_cast<std::size_t>(dr - db)] = factor;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(dr - db + i)] -= factor * b.coeffs_[static_cast<std::size_t>(i)];
    trim_trailing_zeros(rem);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs_from_degree_1) : coeffs_(std::move(coeffs_from_degree_1)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty())
    throw InvalidPolynomial("the zero polynomial is not a valid search polynomial");
}

Rational IntPolynomial::eval(const Rational& s) const {
  // p(s) = s * (c_1 + s * (c_2 + ...)) keeps everything exact.
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + Rational(*it);
  return acc * s;
}

int IntPolynomial::sign_near_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 1;  // unreachable: constructor rejects the zero polynomial
}

RatPoly IntPolynomial::as_rat_poly() const {
  std::vector<Rational> v(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = Rational(coeffs_[i]);
  return RatPoly(std::move(v));
}

std::string IntPolynomial::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    Int mag = abs(coeffs_[i]);
    if (mag != 1) out += mag.str();
    out += "x";
    if (i > 0) out += "^" + std::to_string(i + 1);
  }
  return out;
}

namespace {

// Signed-remainder chain of the squarefree part of p. The last element is a
// nonzero constant, which keeps the sign-variation count well-behaved at
// points where interior chain members vanish.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  // Squarefree part: p / gcd(p, p').
  RatPoly a = p;
  RatPoly b = p.derivative();
  while (!b.is_zero()) {
    RatPoly r = RatPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  // a is gcd(p, p') up to a rational factor.
  RatPoly sf = a.degree() > 0 ? RatPoly::divmod(p, a).first : p;

  std::vector<RatPoly> chain;
  chain.push_back(sf);
  chain.push_back(sf.derivative());
  while (!chain.back().is_zero()) {
    RatPoly r = RatPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(RatPoly{} - r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const RatPoly& q : chain) {
    Rational v = q.eval(x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s != 0) {
      if (prev != 0 && s != prev) ++variations;
      prev = s;
    }
  }
  return variations;
}

}  // namespace

int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  assert(a < b);
  std::vector<RatPoly> chain = sturm_chain(p.as_rat_poly());
  // With zeros ignored, the variation count is right-continuous, so the
  // difference counts distinct roots in the half-open interval (a, b].
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rational IntPolynomial::positivity_delta() const {
  if (sign_near_zero() < 0)
    throw NotPositiveNearZero("polynomial is negative on a right neighborhood of zero: " + to_text());
  Rational delta(1);
  while (sturm_count(*this, Rational(0), delta) > 0) delta /= 2;
  return delta;
}

}  // namespace polyvdw

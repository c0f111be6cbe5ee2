#include "polyvdw/rational.hpp"

#include <cctype>

#include "polyvdw/errors.hpp"

namespace polyvdw {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw ConfigError("not a rational: '" + std::string(whole) + "' (use \"p\" or \"p/q\")");
  Int v{std::string(s)};
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ConfigError("empty rational");
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  Int num = parse_int(trim(s.substr(0, slash)), text);
  std::string_view den_part = trim(s.substr(slash + 1));
  if (!all_digits(den_part))
    throw ConfigError("denominator must be a positive integer in '" + std::string(text) + "'");
  Int den{std::string(den_part)};
  return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += '/';
    out += denominator(x).str();
  }
  return out;
}

Int floor_rational(const Rational& x) {
  Int num = numerator(x);
  Int den = denominator(x);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int pow2_int(int k) {
  Int one(1);
  return one << k;
}

}  // namespace polyvdw

#include "polyvdw/sympoly_text.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "polyvdw/errors.hpp"

namespace polyvdw {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw SyntaxError("expected an integer", start);
    return Int(std::string(text.substr(start, pos - start)));
  }

  Rational rational() {
    Int num = integer();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t den_pos = pos;
      Int den = integer();
      if (den <= 0) throw SyntaxError("denominator must be positive", den_pos);
      return make_rational(std::move(num), std::move(den));
    }
    return Rational(num);
  }
};

Term parse_term(Cursor& cur, int k) {
  Rational head = cur.rational();
  cur.expect('*');
  cur.expect('[');
  std::vector<Rational> tail;
  tail.push_back(cur.rational());
  while (cur.peek() == ',') {
    cur.expect(',');
    tail.push_back(cur.rational());
  }
  std::size_t close_pos = cur.pos;
  cur.expect(']');
  if (static_cast<int>(tail.size()) > k)
    throw DegreeExceedsK("tail of length " + std::to_string(tail.size()) +
                         " exceeds k = " + std::to_string(k) + " (at offset " +
                         std::to_string(close_pos) + ")");
  return Term(std::move(head), std::move(tail), k);
}

int max_tail_length(std::string_view text) {
  // One cheap pre-pass: longest comma run inside brackets, plus one.
  int best = 1;
  int current = 0;
  bool inside = false;
  for (char c : text) {
    if (c == '[') {
      inside = true;
      current = 1;
    } else if (c == ']') {
      inside = false;
      best = std::max(best, current);
    } else if (inside && c == ',') {
      ++current;
    }
  }
  return best;
}

}  // namespace

SymPoly parse_sympoly(std::string_view text, int k) {
  Cursor cur{text};
  std::vector<Term> terms;
  terms.push_back(parse_term(cur, k));
  while (cur.peek() == '+') {
    cur.expect('+');
    terms.push_back(parse_term(cur, k));
  }
  if (!cur.at_end()) throw SyntaxError("trailing input after expression", cur.pos);
  return SymPoly::normalized(std::move(terms));
}

SymPoly parse_sympoly(std::string_view text) { return parse_sympoly(text, max_tail_length(text)); }

std::string to_text(const SymPoly& g) {
  std::string out;
  for (const Term& t : g.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t.iota());
    out += "*[";
    for (std::size_t i = 0; i < t.tail().size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(t.tail()[i]);
    }
    out += "]";
  }
  return out;
}

std::string to_json_string(const SymPoly& g) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Term& t : g.terms()) {
    nlohmann::ordered_json item;
    item["head"] = to_string(t.iota());
    auto tail = nlohmann::ordered_json::array();
    for (const Rational& slot : t.tail()) tail.push_back(to_string(slot));
    item["tail"] = tail;
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

SymPoly sympoly_from_json(std::string_view json_text, int k) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad symbolic polynomial JSON: ") + e.what());
  }
  if (!arr.is_array() || arr.empty())
    throw ConfigError("symbolic polynomial JSON must be a nonempty array");
  std::vector<Term> terms;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("head") || !item.contains("tail"))
      throw ConfigError("each term needs {head, tail}");
    Rational head = parse_rational(item.at("head").get<std::string>());
    std::vector<Rational> tail;
    for (const auto& slot : item.at("tail")) tail.push_back(parse_rational(slot.get<std::string>()));
    if (static_cast<int>(tail.size()) > k)
      throw DegreeExceedsK("tail of length " + std::to_string(tail.size()) +
                           " exceeds k = " + std::to_string(k));
    terms.emplace_back(std::move(head), std::move(tail), k);
  }
  return SymPoly::normalized(std::move(terms));
}

}  // namespace polyvdw

#include "toml_lite.hpp"

#include <cctype>
#include <string>

#include "polyvdw/errors.hpp"

namespace polyvdw::detail {

namespace {

using nlohmann::json;

struct TomlCursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
  }

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return at_end() ? '\0' : text[pos]; }

  void advance() {
    if (text[pos] == '\n') ++line;
    ++pos;
  }

  void skip_inline_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  }

  void skip_ws_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string bare_key() {
    skip_inline_ws();
    std::string key;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
      key += text[pos], advance();
    if (key.empty()) fail("expected a key");
    return key;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  json value() {
    skip_ws_and_comments();
    char c = peek();
    if (c == '"') return string_value();
    if (c == '[') return array_value();
    if (c == '{') return inline_table();
    if (c == 't' || c == 'f') return bool_value();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) return number_value();
    fail("expected a value (string, integer, boolean, array, or inline table)");
  }

  json string_value() {
    expect('"');
    std::string out;
    while (!at_end() && peek() != '"') {
      if (peek() == '\n') fail("unterminated string");
      if (peek() == '\\') {
        advance();
        char esc = peek();
        if (esc == 'n') out += '\n';
        else if (esc == 't') out += '\t';
        else if (esc == '"') out += '"';
        else if (esc == '\\') out += '\\';
        else fail("unsupported escape");
        advance();
      } else {
        out += text[pos];
        advance();
      }
    }
    expect('"');
    return json(out);
  }

  json bool_value() {
    if (text.substr(pos, 4) == "true") {
      pos += 4;
      return json(true);
    }
    if (text.substr(pos, 5) == "false") {
      pos += 5;
      return json(false);
    }
    fail("expected true or false");
  }

  json number_value() {
    std::string num;
    if (peek() == '-' || peek() == '+') num += text[pos], advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) num += text[pos], advance();
    if (num.empty() || num == "-" || num == "+") fail("expected digits");
    if (peek() == '.' || peek() == 'e' || peek() == 'E' || peek() == '/')
      fail("only integers are accepted here; write rationals as strings like \"3/8\"");
    return json(std::stoll(num));
  }

  json array_value() {
    expect('[');
    json arr = json::array();
    skip_ws_and_comments();
    if (peek() == ']') {
      advance();
      return arr;
    }
    while (true) {
      arr.push_back(value());
      skip_ws_and_comments();
      if (peek() == ',') {
        advance();
        skip_ws_and_comments();
        if (peek() == ']') {  // trailing comma
          advance();
          return arr;
        }
        continue;
      }
      expect(']');
      return arr;
    }
  }

  json inline_table() {
    expect('{');
    json obj = json::object();
    skip_ws_and_comments();
    if (peek() == '}') {
      advance();
      return obj;
    }
    while (true) {
      std::string key = bare_key();
      skip_inline_ws();
      expect('=');
      obj[key] = value();
      skip_ws_and_comments();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect('}');
      return obj;
    }
  }
};

}  // namespace

nlohmann::json parse_toml_subset(std::string_view text) {
  TomlCursor cur{text};
  json root = json::object();
  json* current = &root;

  cur.skip_ws_and_comments();
  while (!cur.at_end()) {
    if (cur.peek() == '[') {
      cur.advance();
      bool array_of_tables = cur.peek() == '[';
      if (array_of_tables) cur.advance();
      std::string name = cur.bare_key();
      cur.expect(']');
      if (array_of_tables) cur.expect(']');
      if (array_of_tables) {
        if (!root.contains(name)) root[name] = json::array();
        root[name].push_back(json::object());
        current = &root[name].back();
      } else {
        root[name] = json::object();
        current = &root[name];
      }
    } else {
      std::string key = cur.bare_key();
      cur.skip_inline_ws();
      cur.expect('=');
      (*current)[key] = cur.value();
    }
    cur.skip_ws_and_comments();
  }
  return root;
}

}  // namespace polyvdw::detail

#include "cdeig/parser.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace cdeig {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

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

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  bool starts_real() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double parse_real() {
    skip_ws();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos += static_cast<size_t>(end - begin);
    return value;
  }

  // Lexes [a-z]+ followed by optional digits, e.g. "it", "e12", "i4".
  std::pair<std::string, std::string> parse_word() {
    skip_ws();
    const size_t start = pos;
    std::string letters;
    while (pos < text.size() && std::islower(static_cast<unsigned char>(text[pos])))
      letters.push_back(text[pos++]);
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (letters.empty()) {
      pos = start;
      fail("expected a basis symbol");
    }
    return {letters, digits};
  }

  CDElement parse_named_atom(int level) {
    const size_t start = pos;
    auto [letters, digits] = parse_word();

    auto need_level = [&](int min_level) {
      if (level < min_level) {
        pos = start;
        fail("'" + letters + digits + "' needs level >= " + std::to_string(min_level));
      }
    };

    if (digits.empty()) {
      if (letters == "i") { need_level(1); return basis_element(level, 1); }
      if (letters == "j") { need_level(2); return basis_element(level, 2); }
      if (letters == "k") { need_level(2); return basis_element(level, 3); }
      if (letters == "t") { need_level(3); return basis_element(level, 4); }
      if (letters == "it") { need_level(3); return basis_element(level, 5); }
      if (letters == "jt") { need_level(3); return basis_element(level, 6); }
      if (letters == "kt") { need_level(3); return basis_element(level, 7); }
      pos = start;
      fail("unknown symbol '" + letters + "'");
    }

    const long idx = std::strtol(digits.c_str(), nullptr, 10);
    if (letters == "e") {
      if (idx >= dim_of_level(level)) {
        pos = start;
        fail("basis index " + digits + " out of range at level " + std::to_string(level));
      }
      return basis_element(level, static_cast<int>(idx));
    }
    if (letters == "i") {
      if (idx < 1) { pos = start; fail("imaginary unit subscript must be >= 1"); }
      if (idx > level) {
        pos = start;
        fail("i" + digits + " needs level >= " + digits);
      }
      return basis_element(level, dim_of_level(static_cast<int>(idx) - 1));
    }
    pos = start;
    fail("unknown symbol '" + letters + digits + "'");
  }

  CDElement parse_atom(int level) {
    const char c = peek();
    if (c == '(') {
      if (level < 1) fail("pair syntax needs level >= 1");
      ++pos;
      CDElement lo = parse_expr(level - 1);
      if (peek() != ',') fail("expected ','");
      ++pos;
      CDElement hi = parse_expr(level - 1);
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return join(lo, hi);
    }
    if (c == '1') {
      // '1' lexes as a REAL; reaching here means a lone identity atom.
      ++pos;
      return one_element(level);
    }
    return parse_named_atom(level);
  }

  CDElement parse_term(int level) {
    if (starts_real()) {
      const double scale = parse_real();
      skip_ws();
      bool explicit_star = false;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        explicit_star = true;
      }
      const char c = peek();
      const bool atom_follows = c == '(' || c == '1' || std::islower(static_cast<unsigned char>(c));
      if (explicit_star && !atom_follows) fail("expected a basis symbol after '*'");
      if (atom_follows) return scale * parse_atom(level);
      return scale * one_element(level);
    }
    return parse_atom(level);
  }

  CDElement parse_expr(int level) {
    CDElement acc = zero_element(level);
    double sign = 1.0;
    const char first = peek();
    if (first == '+' || first == '-') {
      sign = first == '-' ? -1.0 : 1.0;
      ++pos;
    }
    acc = acc + sign * parse_term(level);
    for (;;) {
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        acc = acc + (c == '-' ? -1.0 : 1.0) * parse_term(level);
        continue;
      }
      return acc;
    }
  }
};

void format_real(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

CDElement parse_element(std::string_view text, int level) {
  Parser p{text};
  CDElement result = p.parse_expr(level);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return result;
}

std::string to_expression(const CDElement& x) {
  std::string out;
  for (int k = 0; k < x.dim(); ++k) {
    const double c = x[k];
    if (c == 0.0) continue;
    const double mag = c < 0.0 ? -c : c;
    if (out.empty()) {
      if (c < 0.0) out += "-";
    } else {
      out += c < 0.0 ? " - " : " + ";
    }
    if (mag != 1.0 || k == 0) {
      format_real(out, mag);
      if (k != 0) out += "*";
    }
    if (k != 0) out += "e" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace cdeig

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cdeig/element.hpp"

namespace cdeig {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the element-expression grammar at the given level:
///
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := [REAL '*'?] atom | REAL
///   atom := '(' expr ',' expr ')' | 'e' UINT | 'i' UINT
///         | '1' | 'i' | 'j' | 'k' | 't' | 'it' | 'jt' | 'kt'
///
/// Whitespace separates tokens and is otherwise ignored.  REAL uses greedy
/// float syntax, so "2e3" is the number 2000; write "2*e3" for a scaled basis
/// element.  The pair form "(x, y)" parses both halves one level down.
CDElement parse_element(std::string_view text, int level);

/// Renders an element back into the expression grammar, e.g. "1 + 2*e3 - e10".
/// parse_element(to_expression(x), x.level) reproduces x.
std::string to_expression(const CDElement& x);

}  // namespace cdeig

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// Parsed form of `vars: x,y,z; gens: x^3, y^3, z^3, x*y*z`. Generators are
/// kept as written (not minimalized) so printing round-trips.
struct IdealExpr {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;

  [[nodiscard]] auto to_ideal() const -> MonomialIdeal;
  /// Normalized text: `vars: x, y, z; gens: x^3, x*y*z`.
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const IdealExpr &, const IdealExpr &) -> bool = default;
};

/// Grammar:
///   expr  := "vars" ":" id ("," id)* ";" "gens" ":" term ("," term)* [";"]
///   term  := factor ("*" factor)*
///   factor:= id ["^" nat]        (nat >= 1)
/// Whitespace is ignored between tokens. With exactly three variables the
/// names x, y, z and x1, x2, x3 also refer to them, in order.
/// Throws ParseError (SyntaxError, UndeclaredVariable).
auto parse_ideal(std::string_view text) -> IdealExpr;

} // namespace lefschetz

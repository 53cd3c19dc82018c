#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdalg/series.hpp"

namespace rdalg {

/// Expression syntax tree. Offsets are byte positions in the parsed text and
/// take no part in equality.
struct Expr {
  enum class Kind { Name, Call, Number, String };

  Kind kind = Kind::Name;
  std::string text;  // identifier, number literal or unescaped string
  std::vector<Expr> args;
  std::size_t offset = 0;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.args == b.args;
  }
};

/// expr ::= ident | ident "(" args ")" | number | string
/// Arity and parameter kinds are checked against the function table.
/// Throws SyntaxError, UnknownFunction or ArityMismatch.
Expr parse_expr(std::string_view text);

/// Canonical text: no spaces inside calls, ", " between arguments.
std::string to_string(const Expr& e);

using SeriesValue = std::variant<OrdSeries, DirSeries>;

/// Evaluates at truncation order trunc. Dirichlet results never depend on
/// indices above trunc.
SeriesValue evaluate(const Expr& e, unsigned trunc);
SeriesValue evaluate(std::string_view text, unsigned trunc);

/// One row per function or builtin: "name(signature)  description".
std::vector<std::string> expression_help();

}  // namespace rdalg

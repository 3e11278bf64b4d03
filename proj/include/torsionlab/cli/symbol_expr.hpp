#pragma once

#include <memory>
#include <optional>
#include <string>

#include "torsionlab/symbols/fourier_symbol.hpp"
#include "torsionlab/symbols/rational_symbol.hpp"
#include "torsionlab/symbols/smooth_symbol.hpp"

namespace torsionlab::cli {

// Grammar (whitespace insensitive):
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power (('*'|'/') power)*
//   power   := atom ('^' ['+'|'-'] int)?
//   atom    := 'z' | 'zbar' | number ['i'] | 'i' | '(' expr ')'
//            | 'exp' '(' expr ')' | 'B' '(' expr ')'
// B(a) is the Blaschke factor with zero at the constant a, |a| != 1.
struct Node {
  enum class Kind { z, zbar, constant, add, sub, mul, div, pow, neg, exp, blaschke };
  Kind kind = Kind::constant;
  cplx value = 0.0;  // constant, or the parameter of B(a)
  int exponent = 0;  // pow
  std::shared_ptr<const Node> lhs, rhs;

  cplx eval(cplx z) const;  // z on the circle; zbar evaluates to 1/z
};
using NodePtr = std::shared_ptr<const Node>;

enum class Classification { rational, smooth, both };
std::string to_string(Classification c);

struct SymbolExpr {
  std::string source;
  NodePtr ast;
  // rational: no exp atom; both: every exp has a constant argument; smooth
  // otherwise.
  Classification classification = Classification::rational;
  std::optional<symbols::RationalSymbol> rational;  // exact lowering
  std::optional<symbols::SmoothSymbol> structured;  // r e^h lowering, circle-regular only

  cplx operator()(double theta) const { return ast->eval(std::polar(1.0, theta)); }
  // Fourier form through the structured lowering when present, adaptive
  // sampling otherwise. Throws DomainError when the symbol has a pole on the
  // circle.
  symbols::FourierSymbol fourier() const;
};

// Throws ParseError with the offending position (a non-constant argument of
// B included), or DomainError for B(a) with |a| = 1.
SymbolExpr parse_symbol(const std::string& text);

// Fully parenthesized text that parses back to the same function.
std::string normal_form(const Node& n);
inline std::string normal_form(const SymbolExpr& e) { return normal_form(*e.ast); }

// Parseable text for library symbols, used to serialize corpus instances.
std::string expression_text(cplx c);
std::string expression_text(const symbols::RationalSymbol& r);
std::string expression_text(const symbols::FourierSymbol& s);
std::string expression_text(const symbols::SmoothSymbol& s);

}  // namespace torsionlab::cli

#include "torsionlab/cli/symbol_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "torsionlab/errors.hpp"

namespace torsionlab::cli {

using symbols::FourierSymbol;
using symbols::RationalSymbol;
using symbols::SmoothSymbol;
using Kind = Node::Kind;

cplx Node::eval(cplx z) const {
  switch (kind) {
    case Kind::z: return z;
    case Kind::zbar: return 1.0 / z;
    case Kind::constant: return value;
    case Kind::add: return lhs->eval(z) + rhs->eval(z);
    case Kind::sub: return lhs->eval(z) - rhs->eval(z);
    case Kind::mul: return lhs->eval(z) * rhs->eval(z);
    case Kind::div: return lhs->eval(z) / rhs->eval(z);
    case Kind::pow: {
      const cplx b = lhs->eval(z);
      cplx r = 1.0;
      for (int k = 0; k < std::abs(exponent); ++k) r *= b;
      return exponent < 0 ? 1.0 / r : r;
    }
    case Kind::neg: return -lhs->eval(z);
    case Kind::exp: return std::exp(lhs->eval(z));
    case Kind::blaschke:
      if (value == cplx(0.0)) return z;
      return (z - value) / (z - 1.0 / std::conj(value)) / std::abs(value);
  }
  return 0.0;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::rational: return "rational";
    case Classification::smooth: return "smooth";
    case Classification::both: return "both";
  }
  return "?";
}

namespace {

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_constant(cplx c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = c;
  return n;
}

bool has_variable(const Node& n) {
  if (n.kind == Kind::z || n.kind == Kind::zbar || n.kind == Kind::blaschke) return true;
  return (n.lhs && has_variable(*n.lhs)) || (n.rhs && has_variable(*n.rhs));
}

bool has_exp(const Node& n) {
  if (n.kind == Kind::exp) return true;
  return (n.lhs && has_exp(*n.lhs)) || (n.rhs && has_exp(*n.rhs));
}

bool has_nonconstant_exp(const Node& n) {
  if (n.kind == Kind::exp && has_variable(*n.lhs)) return true;
  return (n.lhs && has_nonconstant_exp(*n.lhs)) || (n.rhs && has_nonconstant_exp(*n.rhs));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    NodePtr n = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return n;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  NodePtr expr() {
    NodePtr n;
    if (accept('-')) n = make(Kind::neg, product());
    else {
      accept('+');
      n = product();
    }
    for (;;) {
      if (accept('+')) n = make(Kind::add, n, product());
      else if (accept('-')) n = make(Kind::sub, n, product());
      else return n;
    }
  }

  NodePtr product() {
    NodePtr n = power();
    for (;;) {
      if (accept('*')) n = make(Kind::mul, n, power());
      else if (accept('/')) n = make(Kind::div, n, power());
      else return n;
    }
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer exponent", start);
    long k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = 10 * k + (s_[pos_++] - '0');
      if (k > 1000) throw ParseError("exponent too large", start);
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::pow;
    n->exponent = sign * static_cast<int>(k);
    n->lhs = base;
    return n;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("expected operand", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    throw ParseError(std::string("expected operand, found '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", start);
    pos_ += static_cast<std::size_t>(end - begin);
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return make_constant(cplx(0.0, x));
    }
    return make_constant(x);
  }

  NodePtr word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string w = s_.substr(start, pos_ - start);
    if (w == "z") return make(Kind::z);
    if (w == "zbar") return make(Kind::zbar);
    if (w == "i") return make_constant(cplx(0.0, 1.0));
    if (w == "exp") {
      expect('(');
      NodePtr arg = expr();
      expect(')');
      return make(Kind::exp, arg);
    }
    if (w == "B") {
      expect('(');
      const std::size_t arg_pos = pos_;
      NodePtr arg = expr();
      expect(')');
      if (has_variable(*arg)) throw ParseError("B(a) needs a constant argument", arg_pos);
      auto n = std::make_shared<Node>();
      n->kind = Kind::blaschke;
      n->value = arg->eval(1.0);
      if (std::abs(std::abs(n->value) - 1.0) < 1e-12)
        throw DomainError("B(a) needs |a| != 1, got |a| = " + std::to_string(std::abs(n->value)));
      return n;
    }
    throw ParseError("unknown identifier '" + w + "'", start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

RationalSymbol blaschke(cplx a) {
  if (a == cplx(0.0)) return RationalSymbol::z_power(1);
  return RationalSymbol(1.0 / std::abs(a), 0, {a}, {1.0 / std::conj(a)});
}

// Exact rational form; exp atoms must have constant arguments.
RationalSymbol lower_rational(const Node& n) {
  switch (n.kind) {
    case Kind::z: return RationalSymbol::z_power(1);
    case Kind::zbar: return RationalSymbol::z_power(-1);
    case Kind::constant: return RationalSymbol::constant(n.value);
    case Kind::add: return lower_rational(*n.lhs) + lower_rational(*n.rhs);
    case Kind::sub: return lower_rational(*n.lhs) - lower_rational(*n.rhs);
    case Kind::mul: return lower_rational(*n.lhs) * lower_rational(*n.rhs);
    case Kind::div: return lower_rational(*n.lhs) / lower_rational(*n.rhs);
    case Kind::pow: return lower_rational(*n.lhs).pow(n.exponent);
    case Kind::neg: return lower_rational(*n.lhs) * RationalSymbol::constant(-1.0);
    case Kind::exp: return RationalSymbol::constant(n.eval(1.0));
    case Kind::blaschke: return blaschke(n.value);
  }
  throw std::logic_error("unhandled node");
}

FourierSymbol lower_fourier(const Node& n);

std::optional<SmoothSymbol> lower_structured(const Node& n) {
  if (!has_nonconstant_exp(n)) {
    const RationalSymbol r = lower_rational(n);
    if (r.scale() == cplx(0.0) || !r.circle_regular()) return std::nullopt;
    return SmoothSymbol::from_rational(r);
  }
  switch (n.kind) {
    case Kind::exp: return SmoothSymbol::from_exponent(lower_fourier(*n.lhs));
    case Kind::mul:
    case Kind::div: {
      auto a = lower_structured(*n.lhs);
      auto b = lower_structured(*n.rhs);
      if (!a || !b) return std::nullopt;
      return *a * (n.kind == Kind::mul ? *b : b->inverse());
    }
    case Kind::pow: {
      auto a = lower_structured(*n.lhs);
      if (!a) return std::nullopt;
      const SmoothSymbol base = n.exponent < 0 ? a->inverse() : *a;
      SmoothSymbol r = SmoothSymbol::from_rational(RationalSymbol());
      for (int k = 0; k < std::abs(n.exponent); ++k) r = r * base;
      return r;
    }
    case Kind::neg: {
      auto a = lower_structured(*n.lhs);
      if (!a) return std::nullopt;
      return *a * SmoothSymbol::from_rational(RationalSymbol::constant(-1.0));
    }
    default: return std::nullopt;
  }
}

FourierSymbol sample_fourier(const Node& n) {
  return FourierSymbol::from_function(
      [&](double th) {
        const cplx v = n.eval(std::polar(1.0, th));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          throw DomainError("symbol is singular on the unit circle");
        return v;
      },
      1e-15);
}

// Exact coefficients when the node is a Laurent polynomial.
std::optional<FourierSymbol> lower_laurent(const Node& n) {
  auto single = [](const FourierSymbol& s) { return s.coeffs().size() == 1; };
  switch (n.kind) {
    case Kind::z: return FourierSymbol::monomial(1);
    case Kind::zbar: return FourierSymbol::monomial(-1);
    case Kind::constant: return FourierSymbol::constant(n.value);
    case Kind::exp:
      if (has_variable(*n.lhs)) return std::nullopt;
      return FourierSymbol::constant(n.eval(1.0));
    case Kind::neg: {
      auto a = lower_laurent(*n.lhs);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Kind::add:
    case Kind::sub:
    case Kind::mul: {
      auto a = lower_laurent(*n.lhs);
      auto b = lower_laurent(*n.rhs);
      if (!a || !b) return std::nullopt;
      if (n.kind == Kind::add) return *a + *b;
      if (n.kind == Kind::sub) return *a - *b;
      return *a * *b;
    }
    case Kind::div: {
      auto a = lower_laurent(*n.lhs);
      auto b = lower_laurent(*n.rhs);
      if (!a || !b || !single(*b)) return std::nullopt;
      const auto [k, c] = *b->coeffs().begin();
      return a->shifted(-k) * (1.0 / c);
    }
    case Kind::pow: {
      auto a = lower_laurent(*n.lhs);
      if (!a) return std::nullopt;
      if (n.exponent < 0) {
        if (!single(*a)) return std::nullopt;
        const auto [k, c] = *a->coeffs().begin();
        return FourierSymbol::monomial(k * n.exponent, std::pow(c, n.exponent));
      }
      FourierSymbol r = FourierSymbol::constant(1.0);
      for (int k = 0; k < n.exponent; ++k) r = r * *a;
      return r;
    }
    case Kind::blaschke: return std::nullopt;
  }
  return std::nullopt;
}

FourierSymbol lower_fourier(const Node& n) {
  if (auto l = lower_laurent(n)) return *l;
  if (!has_exp(n)) {
    const RationalSymbol r = lower_rational(n);
    for (const auto& b : r.poles())
      if (std::abs(std::abs(b) - 1.0) < r.tolerances().circle) throw DomainError("pole on the unit circle");
  }
  if (auto s = lower_structured(n)) return s->to_fourier();
  return sample_fourier(n);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string constant_text(cplx c) {
  if (c.imag() == 0.0) return c.real() < 0 || std::signbit(c.real()) ? "(-" + fmt(-c.real()) + ")" : fmt(c.real());
  std::string im = fmt(std::abs(c.imag())) + "i";
  if (c.real() == 0.0) return c.imag() < 0 ? "(-" + im + ")" : "(" + im + ")";
  return "(" + fmt(c.real()) + (c.imag() < 0 ? "-" : "+") + im + ")";
}

}  // namespace

FourierSymbol SymbolExpr::fourier() const { return lower_fourier(*ast); }

SymbolExpr parse_symbol(const std::string& text) {
  SymbolExpr e;
  e.source = text;
  e.ast = Parser(text).parse();
  if (!has_exp(*e.ast)) e.classification = Classification::rational;
  else if (!has_nonconstant_exp(*e.ast)) e.classification = Classification::both;
  else e.classification = Classification::smooth;
  if (e.classification != Classification::smooth) e.rational = lower_rational(*e.ast);
  e.structured = lower_structured(*e.ast);
  return e;
}

std::string normal_form(const Node& n) {
  switch (n.kind) {
    case Kind::z: return "z";
    case Kind::zbar: return "zbar";
    case Kind::constant: return constant_text(n.value);
    case Kind::add: return "(" + normal_form(*n.lhs) + " + " + normal_form(*n.rhs) + ")";
    case Kind::sub: return "(" + normal_form(*n.lhs) + " - " + normal_form(*n.rhs) + ")";
    case Kind::mul: return "(" + normal_form(*n.lhs) + " * " + normal_form(*n.rhs) + ")";
    case Kind::div: return "(" + normal_form(*n.lhs) + " / " + normal_form(*n.rhs) + ")";
    case Kind::pow: return "(" + normal_form(*n.lhs) + "^" + std::to_string(n.exponent) + ")";
    case Kind::neg: return "(-" + normal_form(*n.lhs) + ")";
    case Kind::exp: return "exp(" + normal_form(*n.lhs) + ")";
    case Kind::blaschke: return "B(" + constant_text(n.value) + ")";
  }
  return "";
}

std::string expression_text(cplx c) { return constant_text(c); }

std::string expression_text(const RationalSymbol& r) {
  std::string out = constant_text(r.scale());
  if (r.monomial_exp() != 0) out += " * z^" + std::to_string(r.monomial_exp());
  for (const auto& a : r.zeros()) out += " * (z - " + constant_text(a) + ")";
  for (const auto& b : r.poles()) out += " / (z - " + constant_text(b) + ")";
  return out;
}

std::string expression_text(const FourierSymbol& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [n, c] : s.coeffs()) {
    if (!out.empty()) out += " + ";
    out += constant_text(c);
    if (n > 0) out += " * z^" + std::to_string(n);
    if (n < 0) out += " * zbar^" + std::to_string(-n);
  }
  return out;
}

std::string expression_text(const SmoothSymbol& s) {
  if (s.exponent.is_zero()) return expression_text(s.rational);
  return expression_text(s.rational) + " * exp(" + expression_text(s.exponent) + ")";
}

}  // namespace torsionlab::cli

#include "epoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>

#include "epoly/errors.hpp"

namespace epoly {

namespace {

struct Ast {
  enum class Kind { Num, VarX, VarY, SymB, Add, Sub, Mul, Div, Neg, Pow, Exp };
  Kind kind;
  Rational num;              // Num
  std::uint32_t index = 0;   // VarX/VarY (1-based), SymB (0-based), Pow exponent
  std::unique_ptr<Ast> lhs, rhs;
};
using AstPtr = std::unique_ptr<Ast>;

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  char take() {
    skip_ws();
    return text_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos());
  }
  std::optional<std::uint32_t> maybe_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return std::nullopt;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer literal too large", pos_);
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }
  std::uint32_t nat() {
    auto v = maybe_nat();
    if (!v) throw ParseError("expected a number", pos());
    return *v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  AstPtr parse() {
    AstPtr e = expr();
    if (!lex_.eof())
      throw ParseError("unexpected trailing input", lex_.pos());
    return e;
  }

 private:
  Lexer lex_;

  static AstPtr node(Ast::Kind k, AstPtr l = nullptr, AstPtr r = nullptr) {
    auto a = std::make_unique<Ast>();
    a->kind = k;
    a->lhs = std::move(l);
    a->rhs = std::move(r);
    return a;
  }

  AstPtr expr() {
    AstPtr acc;
    if (lex_.accept('-')) {
      acc = node(Ast::Kind::Neg, term());
    } else {
      lex_.accept('+');
      acc = term();
    }
    for (;;) {
      if (lex_.accept('+')) {
        acc = node(Ast::Kind::Add, std::move(acc), term());
      } else if (lex_.accept('-')) {
        acc = node(Ast::Kind::Sub, std::move(acc), term());
      } else {
        return acc;
      }
    }
  }

  AstPtr term() {
    AstPtr acc = factor();
    for (;;) {
      if (lex_.accept('*')) {
        acc = node(Ast::Kind::Mul, std::move(acc), factor());
      } else if (lex_.accept('/')) {
        acc = node(Ast::Kind::Div, std::move(acc), factor());
      } else {
        return acc;
      }
    }
  }

  AstPtr factor() {
    AstPtr a = atom();
    if (lex_.accept('^')) {
      auto p = node(Ast::Kind::Pow, std::move(a));
      p->index = lex_.nat();
      return p;
    }
    return a;
  }

  AstPtr atom() {
    std::size_t at = lex_.pos();
    char c = lex_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto a = std::make_unique<Ast>();
      a->kind = Ast::Kind::Num;
      a->num = Rational(static_cast<long>(lex_.nat()));
      return a;
    }
    if (c == '(') {
      lex_.take();
      AstPtr e = expr();
      lex_.expect(')');
      return e;
    }
    if (c == 'E') {
      lex_.take();
      lex_.expect('(');
      AstPtr e = expr();
      lex_.expect(')');
      return node(Ast::Kind::Exp, std::move(e));
    }
    if (c == 'x' || c == 'y') {
      lex_.take();
      auto a = std::make_unique<Ast>();
      a->kind = c == 'x' ? Ast::Kind::VarX : Ast::Kind::VarY;
      a->index = lex_.maybe_nat().value_or(1);
      if (a->index == 0) throw ParseError("variable indices start at 1", at);
      return a;
    }
    if (c == 'b') {
      lex_.take();
      auto a = std::make_unique<Ast>();
      a->kind = Ast::Kind::SymB;
      a->index = lex_.nat();
      return a;
    }
    throw ParseError("expected an atom", at);
  }
};

// --- EPoly evaluation -------------------------------------------------------

// y_k aliases x_{k+1} in E-polynomial context.
std::uint32_t epoly_var_index(const Ast& a) {
  return a.kind == Ast::Kind::VarX ? a.index - 1 : a.index;
}

std::uint32_t max_var_index(const Ast& a) {
  std::uint32_t m = 0;
  if (a.kind == Ast::Kind::VarX || a.kind == Ast::Kind::VarY)
    m = epoly_var_index(a) + 1;
  if (a.lhs) m = std::max(m, max_var_index(*a.lhs));
  if (a.rhs) m = std::max(m, max_var_index(*a.rhs));
  return m;
}

EPoly eval_epoly(const Ast& a, std::uint32_t nvars) {
  switch (a.kind) {
    case Ast::Kind::Num:
      return EPoly::constant(nvars, a.num);
    case Ast::Kind::VarX:
    case Ast::Kind::VarY:
      return EPoly::variable(nvars, epoly_var_index(a));
    case Ast::Kind::SymB:
      return EPoly::constant(nvars, BaseCoeff::symbol(a.index));
    case Ast::Kind::Add:
      return eval_epoly(*a.lhs, nvars) + eval_epoly(*a.rhs, nvars);
    case Ast::Kind::Sub:
      return eval_epoly(*a.lhs, nvars) - eval_epoly(*a.rhs, nvars);
    case Ast::Kind::Mul:
      return eval_epoly(*a.lhs, nvars) * eval_epoly(*a.rhs, nvars);
    case Ast::Kind::Div: {
      EPoly d = eval_epoly(*a.rhs, nvars);
      if (d.terms().size() != 1 || !d.terms()[0].first.is_trivial() ||
          !d.terms()[0].second.is_rational())
        throw UsageError("division is only defined by nonzero rationals");
      Rational r = d.terms()[0].second.as_rational();
      return scale(eval_epoly(*a.lhs, nvars), Rational(1) / r);
    }
    case Ast::Kind::Neg:
      return -eval_epoly(*a.lhs, nvars);
    case Ast::Kind::Pow: {
      EPoly b = eval_epoly(*a.lhs, nvars);
      EPoly out = EPoly::one(nvars);
      for (std::uint32_t i = 0; i < a.index; ++i) out = out * b;
      return out;
    }
    case Ast::Kind::Exp:
      return exp_apply(eval_epoly(*a.lhs, nvars));
  }
  throw Error("unreachable");
}

// --- XY evaluation ----------------------------------------------------------

struct XYKey {
  std::vector<std::uint32_t> xexp, yexp;
  auto operator<=>(const XYKey&) const = default;
};
using XYMap = std::map<XYKey, Rational>;

void xy_add_term(XYMap& m, XYKey k, const Rational& c) {
  if (c == 0) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

XYMap eval_xy(const Ast& a) {
  XYMap out;
  switch (a.kind) {
    case Ast::Kind::Num:
      xy_add_term(out, XYKey{}, a.num);
      return out;
    case Ast::Kind::VarX: {
      XYKey k;
      k.xexp.resize(a.index, 0);
      k.xexp[a.index - 1] = 1;
      xy_add_term(out, std::move(k), Rational(1));
      return out;
    }
    case Ast::Kind::VarY: {
      XYKey k;
      k.yexp.resize(a.index, 0);
      k.yexp[a.index - 1] = 1;
      xy_add_term(out, std::move(k), Rational(1));
      return out;
    }
    case Ast::Kind::SymB:
      throw UsageError("b-symbols are not allowed in x,y-polynomials");
    case Ast::Kind::Exp:
      throw UsageError("E is not allowed in x,y-polynomials");
    case Ast::Kind::Add: {
      out = eval_xy(*a.lhs);
      for (auto& [k, c] : eval_xy(*a.rhs)) xy_add_term(out, k, c);
      return out;
    }
    case Ast::Kind::Sub: {
      out = eval_xy(*a.lhs);
      for (auto& [k, c] : eval_xy(*a.rhs)) xy_add_term(out, k, -c);
      return out;
    }
    case Ast::Kind::Neg: {
      for (auto& [k, c] : eval_xy(*a.lhs)) out.emplace(k, -c);
      return out;
    }
    case Ast::Kind::Mul: {
      XYMap l = eval_xy(*a.lhs), r = eval_xy(*a.rhs);
      for (const auto& [ka, ca] : l)
        for (const auto& [kb, cb] : r) {
          XYKey k;
          k.xexp.resize(std::max(ka.xexp.size(), kb.xexp.size()), 0);
          k.yexp.resize(std::max(ka.yexp.size(), kb.yexp.size()), 0);
          for (std::size_t i = 0; i < ka.xexp.size(); ++i) k.xexp[i] += ka.xexp[i];
          for (std::size_t i = 0; i < kb.xexp.size(); ++i) k.xexp[i] += kb.xexp[i];
          for (std::size_t i = 0; i < ka.yexp.size(); ++i) k.yexp[i] += ka.yexp[i];
          for (std::size_t i = 0; i < kb.yexp.size(); ++i) k.yexp[i] += kb.yexp[i];
          xy_add_term(out, std::move(k), ca * cb);
        }
      return out;
    }
    case Ast::Kind::Div: {
      XYMap r = eval_xy(*a.rhs);
      if (r.size() != 1 || r.begin()->first != XYKey{})
        throw UsageError("division is only defined by nonzero rationals");
      Rational d = r.begin()->second;
      for (auto& [k, c] : eval_xy(*a.lhs)) out.emplace(k, c / d);
      return out;
    }
    case Ast::Kind::Pow: {
      XYMap b = eval_xy(*a.lhs);
      XYMap acc;
      xy_add_term(acc, XYKey{}, Rational(1));
      for (std::uint32_t i = 0; i < a.index; ++i) {
        XYMap next;
        for (const auto& [ka, ca] : acc)
          for (const auto& [kb, cb] : b) {
            XYKey k;
            k.xexp.resize(std::max(ka.xexp.size(), kb.xexp.size()), 0);
            k.yexp.resize(std::max(ka.yexp.size(), kb.yexp.size()), 0);
            for (std::size_t j = 0; j < ka.xexp.size(); ++j) k.xexp[j] += ka.xexp[j];
            for (std::size_t j = 0; j < kb.xexp.size(); ++j) k.xexp[j] += kb.xexp[j];
            for (std::size_t j = 0; j < ka.yexp.size(); ++j) k.yexp[j] += ka.yexp[j];
            for (std::size_t j = 0; j < kb.yexp.size(); ++j) k.yexp[j] += kb.yexp[j];
            xy_add_term(next, std::move(k), ca * cb);
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw Error("unreachable");
}

// --- Formatting -------------------------------------------------------------

std::string format_bc_monomial(const BaseCoeff::Exponents& exps) {
  std::string out;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "b" + std::to_string(j);
    if (exps[j] > 1) out += "^" + std::to_string(exps[j]);
  }
  return out;
}

// Renders with the sign folded in; used inside parenthesized sums.
std::string format_base_coeff_sum(const BaseCoeff& c) {
  std::string out;
  bool first = true;
  // Descending keys so higher b-monomials come first.
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [exps, q] = *it;
    Rational mag = q < 0 ? Rational(-q) : q;
    std::string mono = format_bc_monomial(exps);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      out += (q < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (q < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string format_xmono(const std::vector<std::uint32_t>& xexp) {
  std::string out;
  for (std::size_t i = 0; i < xexp.size(); ++i) {
    if (xexp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (xexp[i] > 1) out += "^" + std::to_string(xexp[i]);
  }
  return out;
}

// Renders one term; sign_out receives -1 when a leading minus was folded out.
std::string format_term(const GenMonomial& m, const BaseCoeff& c, int& sign_out) {
  sign_out = 1;
  std::string mono = format_xmono(m.xexp);
  if (m.exparg) {
    if (!mono.empty()) mono += "*";
    mono += "E(" + format_epoly(*m.exparg) + ")";
  }
  std::string coeff;
  if (c.term_count() == 1) {
    const auto& [exps, q] = *c.terms().begin();
    if (q < 0) sign_out = -1;
    Rational mag = q < 0 ? Rational(-q) : q;
    std::string bmono = format_bc_monomial(exps);
    if (mag != 1 || (bmono.empty() && mono.empty())) coeff = to_string(mag);
    if (!bmono.empty()) coeff += (coeff.empty() ? "" : "*") + bmono;
  } else {
    coeff = "(" + format_base_coeff_sum(c) + ")";
  }
  if (coeff.empty()) return mono;
  if (mono.empty()) return coeff;
  return coeff + "*" + mono;
}

}  // namespace

EPoly parse_epoly(std::string_view text, std::uint32_t min_nvars) {
  Parser parser(text);
  AstPtr ast = parser.parse();
  std::uint32_t nvars = std::max(min_nvars, max_var_index(*ast));
  return eval_epoly(*ast, nvars);
}

std::string format_epoly(const EPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    int sign = 1;
    std::string body = format_term(m, c, sign);
    if (first) {
      out += (sign < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sign < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

XYPoly parse_xy_poly(std::string_view text, std::uint32_t min_nx,
                     std::uint32_t min_ny) {
  Parser parser(text);
  AstPtr ast = parser.parse();
  XYMap m = eval_xy(*ast);
  XYPoly out;
  out.nx = min_nx;
  out.ny = min_ny;
  for (const auto& [k, c] : m) {
    out.nx = std::max<std::uint32_t>(out.nx, static_cast<std::uint32_t>(k.xexp.size()));
    out.ny = std::max<std::uint32_t>(out.ny, static_cast<std::uint32_t>(k.yexp.size()));
  }
  for (const auto& [k, c] : m) {
    XYPoly::Term t;
    t.xexp = k.xexp;
    t.xexp.resize(out.nx, 0);
    t.yexp = k.yexp;
    t.yexp.resize(out.ny, 0);
    t.coeff = c;
    out.terms.push_back(std::move(t));
  }
  return out;
}

XYPoly with_xy_arity(const XYPoly& p, std::uint32_t nx, std::uint32_t ny) {
  if (nx < p.nx || ny < p.ny)
    throw UsageError("cannot narrow x,y-polynomial arity");
  XYPoly out;
  out.nx = nx;
  out.ny = ny;
  out.terms = p.terms;
  for (auto& t : out.terms) {
    t.xexp.resize(nx, 0);
    t.yexp.resize(ny, 0);
  }
  return out;
}

std::string format_xy_poly(const XYPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms) {
    std::string mono = format_xmono(t.xexp);
    std::string ymono;
    for (std::size_t i = 0; i < t.yexp.size(); ++i) {
      if (t.yexp[i] == 0) continue;
      if (!ymono.empty()) ymono += "*";
      ymono += "y" + std::to_string(i + 1);
      if (t.yexp[i] > 1) ymono += "^" + std::to_string(t.yexp[i]);
    }
    if (!ymono.empty()) mono += (mono.empty() ? "" : "*") + ymono;
    Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
    std::string body;
    if (mag != 1 || mono.empty()) body = to_string(mag);
    if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
    if (first) {
      out += (t.coeff < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (t.coeff < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace epoly

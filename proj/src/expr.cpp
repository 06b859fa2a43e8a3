#include "weyl/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace weyl {

namespace {

enum class Tok { Number, Ident, Caret, Star, Slash, Plus, Minus, At, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;  // digits for Number, name for Ident
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j]))))
        ++j;
      out.push_back({Tok::Ident, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '@': kind = Tok::At; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

struct Variable {
  bool is_d;
  int index;  // 1-based; 0 means plain x/d
};

Variable classify(const Token& t) {
  const std::string& s = t.text;
  if (s.empty() || (s[0] != 'x' && s[0] != 'd'))
    throw ParseError("unknown identifier '" + s + "' (variables are x<i> and d<i>)", t.pos);
  Variable v{s[0] == 'd', 0};
  if (s.size() > 1) {
    for (size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("unknown identifier '" + s + "' (variables are x<i> and d<i>)", t.pos);
    v.index = std::stoi(s.substr(1));
    if (v.index < 1) throw ParseError("variable index must be at least 1", t.pos);
  }
  return v;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int arity) : toks_(std::move(tokens)), n_(arity) {}

  WeylElement run() {
    WeylElement e = parse_expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[cursor_]; }
  Token next() { return toks_[cursor_++]; }
  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++cursor_;
      return true;
    }
    return false;
  }

  WeylElement parse_expr() {
    bool negative = false;
    if (accept(Tok::Minus))
      negative = true;
    else
      accept(Tok::Plus);
    WeylElement e = parse_composition();
    if (negative) e = -e;
    for (;;) {
      if (accept(Tok::Plus)) {
        e = e + parse_composition();
      } else if (accept(Tok::Minus)) {
        e = e - parse_composition();
      } else {
        return e;
      }
    }
  }

  WeylElement parse_composition() {
    WeylElement e = parse_primary();
    while (accept(Tok::At)) e = compose(e, parse_primary());
    return e;
  }

  WeylElement parse_primary() {
    if (accept(Tok::LParen)) {
      WeylElement e = parse_expr();
      if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
      return e;
    }
    return parse_monomial();
  }

  WeylElement parse_monomial() {
    BigRat coeff(1);
    MultiIndex alpha(n_), beta(n_);
    bool seen_d = false;
    bool any = false;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Number) {
        next();
        BigInt num(t.text);
        if (accept(Tok::Slash)) {
          const Token& dt = peek();
          if (dt.kind != Tok::Number) throw ParseError("expected denominator", dt.pos);
          next();
          BigInt den(dt.text);
          if (den == 0) throw ParseError("zero denominator", dt.pos);
          coeff *= BigRat(num, den);
        } else {
          coeff *= BigRat(num);
        }
      } else if (t.kind == Tok::Ident) {
        next();
        const Variable v = classify(t);
        const int slot = (v.index == 0 ? 1 : v.index) - 1;
        int exp = 1;
        if (accept(Tok::Caret)) {
          const Token& et = peek();
          if (et.kind != Tok::Number)
            throw ParseError("expected non-negative integer exponent", et.pos);
          next();
          if (et.text.size() > 6) throw ParseError("exponent too large", et.pos);
          exp = std::stoi(et.text);
        }
        if (v.is_d) {
          seen_d = true;
          beta.set(slot, beta[slot] + exp);
        } else {
          if (seen_d)
            throw ParseError(
                "normal-order violation: x-factor after a d-factor in a '*'-term; "
                "use '@' for operator products",
                t.pos);
          alpha.set(slot, alpha[slot] + exp);
        }
      } else {
        if (!any) throw ParseError("expected rational literal or variable", t.pos);
        break;
      }
      any = true;
      if (!accept(Tok::Star)) break;
    }
    return WeylElement::monomial(WeylMonomial(std::move(alpha), std::move(beta)), coeff);
  }

  std::vector<Token> toks_;
  int n_;
  size_t cursor_ = 0;
};

// Scans identifiers: returns {max indexed variable, plain x/d present}.
std::pair<int, bool> scan_variables(const std::vector<Token>& toks) {
  int max_index = 0;
  bool plain = false;
  for (const auto& t : toks) {
    if (t.kind != Tok::Ident) continue;
    const Variable v = classify(t);
    if (v.index == 0)
      plain = true;
    else if (v.index > max_index)
      max_index = v.index;
  }
  return {max_index, plain};
}

int resolve_arity(const std::vector<Token>& toks, std::optional<int> declared) {
  const auto [max_index, plain] = scan_variables(toks);
  if (declared) {
    if (*declared < 1) throw ParseError("arity must be positive", 0);
    if (max_index > *declared)
      throw ParseError("inconsistent arity: variable index " + std::to_string(max_index) +
                           " exceeds declared arity " + std::to_string(*declared),
                       0);
    if (plain && *declared != 1)
      throw ParseError("plain x/d are only valid at arity 1; use indexed variables", 0);
    return *declared;
  }
  if (plain && max_index > 1)
    throw ParseError("inconsistent arity: plain x/d mixed with indexed variables", 0);
  return std::max(1, max_index);
}

}  // namespace

WeylElement parse_element(std::string_view text, std::optional<int> n) {
  std::vector<Token> toks = lex(text);
  const int arity = resolve_arity(toks, n);
  return Parser(std::move(toks), arity).run();
}

int infer_arity(std::string_view text) { return resolve_arity(lex(text), std::nullopt); }

namespace {

void render_power(std::ostringstream& out, bool& first, const char* base, int index, int n,
                  int exp) {
  if (exp == 0) return;
  if (!first) out << "*";
  out << base;
  if (n > 1) out << index;
  if (exp > 1) out << "^" << exp;
  first = false;
}

}  // namespace

std::string format_element(const WeylElement& x) {
  if (x.is_zero()) return "0";
  const int n = x.arity();
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [m, c] : x.terms()) {
    BigRat mag = c < 0 ? BigRat(-c) : c;
    if (first_term) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::ostringstream vars;
    bool first_factor = true;
    for (int i = 0; i < n; ++i) render_power(vars, first_factor, "x", i + 1, n, m.alpha[i]);
    for (int i = 0; i < n; ++i) render_power(vars, first_factor, "d", i + 1, n, m.beta[i]);
    const std::string v = vars.str();
    if (v.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << v;
    }
    first_term = false;
  }
  return out.str();
}

}  // namespace weyl

#include "workbench/ratfunc.hpp"

#include <cctype>

namespace wb::rf {

ExprError::ExprError(std::size_t pos, const std::string& msg)
    : std::runtime_error("at offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

// expr    := ['+'|'-'] term {('+'|'-') term}
// term    := unary {('*'|'/'|<juxtaposition>) unary}
// unary   := '-' unary | power
// power   := primary ['^' intatom]
// primary := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
// Exponents are integer expressions over literals and integer parameters.
class Parser {
public:
  Parser(const std::string& s, const VarSet& vars, const ParseEnv& env) : s_(s), vars_(vars), env_(env) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ExprError(p_, msg); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    std::size_t b = p_;
    while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
    return s_.substr(b, p_ - b);
  }

  long integer() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected integer");
    if (p_ - b > 9) fail("integer too large");
    return std::stol(s_.substr(b, p_ - b));
  }

  RatFunc constant(const CycNum& c) const { return RatFunc::constant(vars_.size(), c); }

  RatFunc expr() {
    RatFunc acc(vars_.size());
    bool neg = false;
    if (accept('+')) {
    } else if (accept('-')) {
      neg = true;
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  bool starts_atom() {
    char c = peek();
    return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) acc = acc * unary();
      else if (accept('/')) {
        std::size_t at = p_;
        RatFunc d = unary();
        if (d.is_zero()) throw ExprError(at, "division by zero");
        acc = acc / d;
      } else if (starts_atom()) acc = acc * unary();
      else break;
    }
    return acc;
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (accept('^')) {
      std::size_t at = p_;
      long e = int_atom();
      if (e < 0 && base.is_zero()) throw ExprError(at, "negative power of zero");
      base = base.pow(e);
    }
    return base;
  }

  long int_atom() {
    if (accept('-')) return -int_atom();
    if (accept('(')) {
      long v = int_expr();
      expect(')');
      return v;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (ident_start(c)) {
      std::size_t at = p_;
      std::string id = ident();
      auto it = env_.int_params.find(id);
      if (it == env_.int_params.end()) throw ExprError(at, "unknown integer parameter '" + id + "'");
      return it->second;
    }
    fail("expected exponent");
  }

  long int_expr() {
    long v = int_term();
    for (;;) {
      if (accept('+')) v += int_term();
      else if (accept('-')) v -= int_term();
      else return v;
    }
  }

  long int_term() {
    long v = int_atom();
    while (accept('*')) v *= int_atom();
    return v;
  }

  RatFunc primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      RatFunc r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(CycNum(integer()));
    if (!ident_start(c)) {
      if (c == '\0') fail("unexpected end of expression");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    std::size_t at = p_;
    std::string id = ident();
    if (auto f = env_.functions.find(id); f != env_.functions.end()) {
      expect('(');
      RatFunc arg = expr();
      expect(')');
      if (f->second->src_vars() != vars_.size() || f->second->dst_vars() != vars_.size())
        throw ExprError(at, "function '" + id + "' does not act on these variables");
      return f->second->apply(arg);
    }
    if (auto m = env_.macros.find(id); m != env_.macros.end()) return m->second;
    if (auto k = env_.constants.find(id); k != env_.constants.end()) return constant(k->second);
    if (id == "zeta") return constant(CycNum::zeta(1));
    if (id == "eta") return constant(CycNum::eta(1));
    if (auto v = vars_.index(id)) return RatFunc::var(vars_.size(), *v);
    throw ExprError(at, "unknown identifier '" + id + "'");
  }

  const std::string& s_;
  const VarSet& vars_;
  const ParseEnv& env_;
  std::size_t p_ = 0;
};

}  // namespace

RatFunc parse_expr(const std::string& text, const VarSet& vars, const ParseEnv& env) {
  return Parser(text, vars, env).run();
}

}  // namespace wb::rf

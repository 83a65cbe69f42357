#include "tarski/number.hpp"

#include <cctype>

namespace tarski {

// ---------------------------------------------------------------------------
// Printing.  Output stays inside the literal grammar: integers, division,
// sqrt(...), + - *, parentheses.  Identical representations print identically.

namespace {

std::string ratStr(const Rat& q) { return q.get_str(); }

std::string numStr(const Num& v) {
  if (v.rational()) return ratStr(v.ratValue());
  const NumNode& n = *v.node();
  std::string root = "sqrt(" + numStr(n.tower->radicand) + ")";
  Num mag = n.hi.sign() < 0 ? -n.hi : n.hi;
  std::string term;
  if (mag.rational() && mag.ratValue() == 1) {
    term = root;
  } else if (mag.rational()) {
    term = ratStr(mag.ratValue()) + "*" + root;
  } else {
    term = "(" + numStr(mag) + ")*" + root;
  }
  bool neg = n.hi.sign() < 0;
  if (n.lo.rational() && n.lo.ratValue() == 0)
    return neg ? "-" + term : term;
  return "(" + numStr(n.lo) + (neg ? " - " : " + ") + term + ")";
}

}  // namespace

std::string Num::str() const { return numStr(*this); }

// ---------------------------------------------------------------------------
// Parsing: expr := term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := '-' factor | INT | 'sqrt' '(' expr ')' | '(' expr ')'
// Fractions like 3/4 are just division.

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw NumberParseError(what + " at position " + std::to_string(pos) +
                           " in \"" + text + "\"");
  }

  bool eat(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Num expr() {
    Num v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Num term() {
    Num v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Num d = factor();
        if (d.isZero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Num factor() {
    skipSpace();
    if (eat('-')) return -factor();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (c == '(') {
      ++pos;
      Num v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (text.compare(start, pos - start, "sqrt") != 0)
        fail("unknown name '" + text.substr(start, pos - start) + "'");
      if (!eat('(')) fail("expected '(' after sqrt");
      Num v = expr();
      if (!eat(')')) fail("expected ')'");
      if (v.sign() < 0) fail("square root of a negative value");
      return Num::sqrt(v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Num integer() {
    size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    mpz_class z(text.substr(start, pos - start));
    return Num(Rat(z));
  }
};

}  // namespace

Num Num::parse(const std::string& text) {
  Parser p(text);
  p.skipSpace();
  if (p.pos >= text.size()) p.fail("empty literal");
  Num v = p.expr();
  p.skipSpace();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace tarski

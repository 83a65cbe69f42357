#include "tarski/script.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tarski/constructions.hpp"

namespace tarski {

namespace {

// ---------------------------------------------------------------------------
// Builtin table

using BuiltinFn = std::function<PartialPoint(const std::vector<Point>&)>;

struct Builtin {
  int arity;
  BuiltinFn fn;
};

// Wrappers that assemble a LineRef from two argument points refuse equal
// points up front instead of letting the LineRef constructor throw.
bool nullLine(const Point& a, const Point& b) { return a == b; }
PartialPoint nullSeg() {
  return PartialPoint::undefined(UndefReason::NullSegment);
}

const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> t;
    auto add = [&t](const char* name, int arity, BuiltinFn fn) {
      t.emplace(name, Builtin{arity, std::move(fn)});
    };
    // primitive operators
    add("ext", 4, [](const std::vector<Point>& a) {
      return ext(a[0], a[1], a[2], a[3]);
    });
    add("ip", 5, [](const std::vector<Point>& a) {
      return ip(a[0], a[1], a[2], a[3], a[4]);
    });
    add("center", 3, [](const std::vector<Point>& a) {
      return center(a[0], a[1], a[2]);
    });
    add("ilc1", 4, [](const std::vector<Point>& a) {
      return ilc(a[0], a[1], a[2], a[3]).first;
    });
    add("ilc2", 4, [](const std::vector<Point>& a) {
      return ilc(a[0], a[1], a[2], a[3]).second;
    });
    add("il", 4, [](const std::vector<Point>& a) {
      return il(a[0], a[1], a[2], a[3]);
    });
    add("alpha", 0, [](const std::vector<Point>&) {
      return PartialPoint(baseTriangle().alpha);
    });
    add("beta", 0, [](const std::vector<Point>&) {
      return PartialPoint(baseTriangle().beta);
    });
    add("gamma", 0, [](const std::vector<Point>&) {
      return PartialPoint(baseTriangle().gamma);
    });
    // derived constructions
    add("e", 1,
        [](const std::vector<Point>& a) { return PartialPoint(eNeq(a[0])); });
    add("e2", 3, [](const std::vector<Point>& a) {
      return PartialPoint(e2(a[0], a[1], a[2]));
    });
    add("midpointIso", 3, [](const std::vector<Point>& a) {
      return guptaMidpointIso(a[0], a[1], a[2]);
    });
    add("density", 3, [](const std::vector<Point>& a) {
      return densityPoint(a[0], a[1], a[2]);
    });
    BuiltinFn pasch = [](const std::vector<Point>& a) {
      return continuousPasch(a[0], a[1], a[2], a[3], a[4]);
    };
    add("cpasch", 5, pasch);
    add("op", 5, pasch);
    add("dperp", 3, [](const std::vector<Point>& a) {
      if (nullLine(a[1], a[2])) return nullSeg();
      return droppedPerp(a[0], LineRef(a[1], a[2]));
    });
    add("gperp", 3, [](const std::vector<Point>& a) {
      return guptaPerp(a[0], a[1], a[2]);
    });
    BuiltinFn erectFirst = [](const std::vector<Point>& a) {
      if (nullLine(a[0], a[1])) return nullSeg();
      return erectedPerp(a[0], LineRef(a[0], a[1]), a[2]).first;
    };
    add("eperp", 3, erectFirst);
    add("Perp", 3, erectFirst);
    BuiltinFn erectSecond = [](const std::vector<Point>& a) {
      if (nullLine(a[0], a[1])) return nullSeg();
      return erectedPerp(a[0], LineRef(a[0], a[1]), a[2]).second;
    };
    add("wit", 3, erectSecond);
    add("eperp2", 3, [](const std::vector<Point>& a) {
      if (nullLine(a[0], a[1])) return nullSeg();
      return shortErectedPerp(a[0], LineRef(a[0], a[1]), a[2]);
    });
    add("midpoint", 3, [](const std::vector<Point>& a) {
      return midpoint(a[0], a[1], a[2]);
    });
    BuiltinFn uperpFoot = [](const std::vector<Point>& a) {
      if (nullLine(a[1], a[2])) return nullSeg();
      return uniformPerp(a[0], LineRef(a[1], a[2]), a[3]).first;
    };
    add("uperp", 4, uperpFoot);
    add("uperphead", 4, [](const std::vector<Point>& a) {
      if (nullLine(a[1], a[2])) return nullSeg();
      return uniformPerp(a[0], LineRef(a[1], a[2]), a[3]).second;
    });
    add("ureflect", 4, [](const std::vector<Point>& a) {
      if (nullLine(a[1], a[2])) return nullSeg();
      return uniformReflect(a[0], LineRef(a[1], a[2]), a[3]);
    });
    add("parallel", 4, [](const std::vector<Point>& a) {
      if (nullLine(a[1], a[2])) return nullSeg();
      return parallelThrough(a[0], LineRef(a[1], a[2]), a[3]);
    });
    add("offline", 2, [](const std::vector<Point>& a) {
      return pointOffLine(a[0], a[1]);
    });
    add("onknotl", 4, [](const std::vector<Point>& a) {
      return pointOnKNotL(a[0], a[1], a[2], a[3]);
    });
    add("ilelim", 4, [](const std::vector<Point>& a) {
      return ilElim(a[0], a[1], a[2], a[3]);
    });
    BuiltinFn radaxisFirst = [](const std::vector<Point>& a) {
      return radicalAxis(CircleRef{a[0], a[1]}, CircleRef{a[2], a[3]}, a[4])
          .first;
    };
    add("radaxis", 5, radaxisFirst);
    add("radaxis1", 5, radaxisFirst);
    add("radaxis2", 5, [](const std::vector<Point>& a) {
      return radicalAxis(CircleRef{a[0], a[1]}, CircleRef{a[2], a[3]}, a[4])
          .second;
    });
    BuiltinFn ccircFirst = [](const std::vector<Point>& a) {
      return circleCircle(CircleRef{a[0], a[1]}, CircleRef{a[2], a[3]}, a[4])
          .first;
    };
    add("ccirc", 5, ccircFirst);
    add("ccirc1", 5, ccircFirst);
    add("ccirc2", 5, [](const std::vector<Point>& a) {
      return circleCircle(CircleRef{a[0], a[1]}, CircleRef{a[2], a[3]}, a[4])
          .second;
    });
    return t;
  }();
  return table;
}

// ---------------------------------------------------------------------------
// Parser

struct Token {
  enum Kind { Ident, LParen, RParen, LBrace, RBrace, Comma, Equals, End };
  Kind kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip();
    if (pos_ >= text_.size()) return {Token::End, "", line_};
    char c = text_[pos_];
    int ln = line_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return {Token::Ident, text_.substr(start, pos_ - start), ln};
    }
    ++pos_;
    switch (c) {
      case '(': return {Token::LParen, "(", ln};
      case ')': return {Token::RParen, ")", ln};
      case '{': return {Token::LBrace, "{", ln};
      case '}': return {Token::RBrace, "}", ln};
      case ',': return {Token::Comma, ",", ln};
      case '=': return {Token::Equals, "=", ln};
      default:
        throw SyntaxError("line " + std::to_string(ln) +
                          ": unexpected character '" + std::string(1, c) + "'");
    }
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { advance(); }

  ScriptAst run() {
    ScriptAst ast;
    ast.name = expectIdent("construction name");
    expect(Token::LParen, "'('");
    if (cur_.kind != Token::RParen) {
      ast.params.push_back(expectIdent("parameter name"));
      while (cur_.kind == Token::Comma) {
        advance();
        ast.params.push_back(expectIdent("parameter name"));
      }
    }
    expect(Token::RParen, "')'");
    expect(Token::LBrace, "'{'");
    declareParams(ast);
    while (true) {
      if (cur_.kind != Token::Ident)
        fail("expected a binding or 'return'");
      if (cur_.text == "return") {
        advance();
        ast.returns.push_back(useIdent("return value"));
        while (cur_.kind == Token::Comma) {
          advance();
          ast.returns.push_back(useIdent("return value"));
        }
        break;
      }
      parseBinding(ast);
    }
    expect(Token::RBrace, "'}'");
    if (cur_.kind != Token::End) fail("trailing input after '}'");
    return ast;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError("line " + std::to_string(cur_.line) + ": " + what +
                      (cur_.kind == Token::End
                           ? std::string(" (at end of input)")
                           : " (found '" + cur_.text + "')"));
  }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  std::string expectIdent(const char* what) {
    if (cur_.kind != Token::Ident) fail(std::string("expected ") + what);
    std::string s = cur_.text;
    advance();
    return s;
  }

  void declareParams(const ScriptAst& ast) {
    for (const std::string& p : ast.params) declare(p);
  }

  void declare(const std::string& name) {
    if (builtins().count(name))
      throw Rebinding("'" + name + "' is a builtin and cannot be bound");
    if (!bound_.emplace(name).second)
      throw Rebinding("'" + name + "' is bound twice");
  }

  std::string useIdent(const char* what) {
    std::string s = expectIdent(what);
    if (!bound_.count(s))
      throw UnboundIdentifier("'" + s + "' is not defined at its use");
    return s;
  }

  // binding := ident '=' call; call arguments may be idents or nested calls,
  // which land in fresh bindings evaluated first.
  void parseBinding(ScriptAst& ast) {
    std::string name = expectIdent("binding name");
    expect(Token::Equals, "'='");
    Call call = parseCall(ast);
    declare(name);
    ast.bindings.push_back({std::move(name), std::move(call)});
  }

  Call parseCall(ScriptAst& ast) {
    std::string fn = expectIdent("builtin name");
    auto it = builtins().find(fn);
    if (it == builtins().end())
      throw UnboundIdentifier("'" + fn + "' is not a builtin construction");
    Call call;
    call.builtin = fn;
    expect(Token::LParen, "'('");
    if (cur_.kind != Token::RParen) {
      call.args.push_back(parseArg(ast));
      while (cur_.kind == Token::Comma) {
        advance();
        call.args.push_back(parseArg(ast));
      }
    }
    expect(Token::RParen, "')'");
    if (static_cast<int>(call.args.size()) != it->second.arity)
      throw ArityError("'" + fn + "' takes " +
                       std::to_string(it->second.arity) + " arguments, got " +
                       std::to_string(call.args.size()));
    return call;
  }

  std::string parseArg(ScriptAst& ast) {
    if (cur_.kind != Token::Ident) fail("expected an argument");
    // Lookahead decides between a plain name and a nested call.
    std::string head = cur_.text;
    advance();
    if (cur_.kind != Token::LParen) {
      if (!bound_.count(head))
        throw UnboundIdentifier("'" + head + "' is not defined at its use");
      return head;
    }
    // Nested call: rewind is unnecessary, parse the tail of the call here.
    auto it = builtins().find(head);
    if (it == builtins().end())
      throw UnboundIdentifier("'" + head + "' is not a builtin construction");
    Call call;
    call.builtin = head;
    expect(Token::LParen, "'('");
    if (cur_.kind != Token::RParen) {
      call.args.push_back(parseArg(ast));
      while (cur_.kind == Token::Comma) {
        advance();
        call.args.push_back(parseArg(ast));
      }
    }
    expect(Token::RParen, "')'");
    if (static_cast<int>(call.args.size()) != it->second.arity)
      throw ArityError("'" + head + "' takes " +
                       std::to_string(it->second.arity) + " arguments, got " +
                       std::to_string(call.args.size()));
    std::string temp = freshName(ast);
    declare(temp);
    ast.bindings.push_back({temp, std::move(call)});
    return temp;
  }

  std::string freshName(const ScriptAst& ast) {
    while (true) {
      std::string cand = "t" + std::to_string(++fresh_);
      if (!bound_.count(cand) && !builtins().count(cand)) {
        bool clashes = false;
        for (const std::string& r : ast.returns)
          if (r == cand) clashes = true;
        if (!clashes) return cand;
      }
    }
  }

  Lexer lex_;
  Token cur_{Token::End, "", 0};
  std::set<std::string> bound_;
  int fresh_ = 0;
};

}  // namespace

ScriptAst parseScript(const std::string& text) { return Parser(text).run(); }

std::string printScript(const ScriptAst& ast) {
  std::ostringstream out;
  out << ast.name << "(";
  for (size_t i = 0; i < ast.params.size(); ++i) {
    if (i) out << ",";
    out << ast.params[i];
  }
  out << "){\n";
  for (const Binding& b : ast.bindings) {
    out << "  " << b.name << " = " << b.call.builtin << "(";
    for (size_t i = 0; i < b.call.args.size(); ++i) {
      if (i) out << ",";
      out << b.call.args[i];
    }
    out << ")\n";
  }
  out << "  return ";
  for (size_t i = 0; i < ast.returns.size(); ++i) {
    if (i) out << ",";
    out << ast.returns[i];
  }
  out << "\n}\n";
  return out.str();
}

ConstructionResult evalScript(const ScriptAst& ast,
                              const std::vector<Point>& args) {
  if (args.size() != ast.params.size())
    throw ArgumentCountMismatch(
        "construction '" + ast.name + "' takes " +
        std::to_string(ast.params.size()) + " points, got " +
        std::to_string(args.size()));
  ConstructionResult result;
  std::map<std::string, Point> env;
  for (size_t i = 0; i < ast.params.size(); ++i) {
    env.emplace(ast.params[i], args[i]);
    result.inputs.emplace_back(ast.params[i], args[i]);
  }
  for (const Binding& b : ast.bindings) {
    std::vector<Point> in;
    in.reserve(b.call.args.size());
    for (const std::string& a : b.call.args) in.push_back(env.at(a));
    PartialPoint v = builtins().at(b.call.builtin).fn(in);
    result.trace.push_back({b.name, b.call, v});
    if (!v.defined()) {
      result.defined = false;
      result.failedBinding = b.name;
      result.reason = v.reason();
      return result;
    }
    env.emplace(b.name, v.point());
  }
  result.defined = true;
  for (const std::string& r : ast.returns)
    result.outputs.emplace_back(r, env.at(r));
  return result;
}

}  // namespace tarski

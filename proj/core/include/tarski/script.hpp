#pragma once

// Small straight-line construction language.  A script is a header
// `name(p1,...,pk){`, a sequence of single-assignment bindings
// `id = builtin(arg,...)`, a final `return id[,id...]`, and `}`.  Nested
// calls are sugar; parsing flattens them into fresh bindings, so the stored
// form is always one builtin application per binding.  `#` starts a comment.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tarski/primitives.hpp"

namespace tarski {

struct ScriptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed source text (bad header, missing return, stray tokens, ...).
struct SyntaxError : ScriptError {
  using ScriptError::ScriptError;
};
// A known builtin applied to the wrong number of arguments.
struct ArityError : ScriptError {
  using ScriptError::ScriptError;
};
// Use of a name that is neither a parameter, an earlier binding, nor (in call
// position) a builtin.
struct UnboundIdentifier : ScriptError {
  using ScriptError::ScriptError;
};
// A name bound twice, or shadowing a parameter or builtin.
struct Rebinding : ScriptError {
  using ScriptError::ScriptError;
};
// eval called with the wrong number of input points.
struct ArgumentCountMismatch : ScriptError {
  using ScriptError::ScriptError;
};

struct Call {
  std::string builtin;
  std::vector<std::string> args;
};

struct Binding {
  std::string name;
  Call call;
};

struct ScriptAst {
  std::string name;
  std::vector<std::string> params;
  std::vector<Binding> bindings;
  std::vector<std::string> returns;
};

// Throws SyntaxError / ArityError / UnboundIdentifier / Rebinding; the
// returned AST is fully checked and in flattened form.
ScriptAst parseScript(const std::string& text);

// Canonical source text for an AST; parseScript(printScript(a)) == a.
std::string printScript(const ScriptAst& ast);

struct TraceEntry {
  std::string name;
  Call call;
  PartialPoint value;
};

struct ConstructionResult {
  bool defined = false;
  // The parameter names with the points they were bound to.
  std::vector<std::pair<std::string, Point>> inputs;
  // Return values in declaration order (only when defined).
  std::vector<std::pair<std::string, Point>> outputs;
  // One entry per evaluated binding, including a final undefined one.
  std::vector<TraceEntry> trace;
  // Set when not defined: the binding that failed and why.
  std::string failedBinding;
  UndefReason reason = UndefReason::BadArgument;
};

// Evaluates with the given input points bound to the parameters positionally.
// A binding that comes out undefined stops evaluation and is reported with
// its reason; no recovery is attempted.
ConstructionResult evalScript(const ScriptAst& ast,
                              const std::vector<Point>& args);

// Renders inputs and trace as SVG, one labelled dot per point; the output
// text is deterministic.  viewBox is {x0, y0, x1, y1} in world coordinates
// (y up); bits controls the precision of the plotted approximations.
std::string emitSvg(const ConstructionResult& result,
                    const std::array<Rat, 4>& viewBox, unsigned bits);

}  // namespace tarski

#include "tarski/verify.hpp"

namespace tarski {

namespace {

Point firstOutput(const ScriptAst& term, const std::vector<Point>& args,
                  const char* where) {
  ConstructionResult res = evalScript(term, args);
  if (!res.defined)
    throw ProbeUndefined(std::string(where) + " evaluation of '" + term.name +
                         "' is undefined at binding '" + res.failedBinding +
                         "' (" + reasonName(res.reason) + ")");
  return res.outputs.front().second;
}

}  // namespace

ProbeReport continuityProbe(const ScriptAst& term,
                            const std::vector<Point>& args, const Rat& delta) {
  Point base = firstOutput(term, args, "base");
  Num d(delta);
  Num worst(0);
  for (size_t i = 0; i < args.size(); ++i) {
    for (int axis = 0; axis < 2; ++axis) {
      for (int sign = -1; sign <= 1; sign += 2) {
        std::vector<Point> moved = args;
        Num step = Num(sign) * d;
        if (axis == 0)
          moved[i].x = moved[i].x + step;
        else
          moved[i].y = moved[i].y + step;
        Point out = firstOutput(term, moved, "perturbed");
        Num disp = dist2(base, out);
        if (worst < disp) worst = disp;
      }
    }
  }
  return {worst, Num::sqrt(worst) / d};
}

}  // namespace tarski

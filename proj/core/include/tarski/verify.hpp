#pragma once

// Seeded property-check suites with independent analytic oracles.  Every
// verdict is an exact field computation; a failure report carries enough
// exact data to replay the trial standalone.

#include "tarski/script.hpp"

#include <cstdint>
#include <optional>

namespace tarski {

struct UnknownSuite : std::runtime_error {
  explicit UnknownSuite(const std::string& m) : std::runtime_error(m) {}
};
// A suite's sampler kept missing its hypotheses: the generator is wrong, not
// the mathematics.
struct ResampleBudgetExhausted : std::runtime_error {
  explicit ResampleBudgetExhausted(const std::string& m)
      : std::runtime_error(m) {}
};
// The probed base configuration sits on a definedness boundary.
struct ProbeUndefined : std::runtime_error {
  explicit ProbeUndefined(const std::string& m) : std::runtime_error(m) {}
};
struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& m) : std::runtime_error(m) {}
};

// Deterministic 64-bit generator; identical seeds replay identical samples on
// every platform (no std::random engines anywhere in the suites).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  long range(long lo, long hi);  // uniform on [lo, hi]
  Rat coordinate();              // p/q with |p| <= 12, 1 <= q <= 6
  Point point();

 private:
  std::uint64_t state_;
};

struct TrialReport {
  std::string suite;
  std::uint64_t trial = 0;  // index among hypothesis-satisfying trials
  std::string proposition;
  std::string verdict;  // "fail"
  std::vector<std::pair<std::string, Point>> config;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;  // requested per proposition
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;  // hypothesis-failing samples discarded
  std::vector<TrialReport> failures;
};

const std::vector<std::string>& suiteNames();

// Runs every proposition of the suite over `trials` hypothesis-satisfying
// samples each, resampling rejected configurations within a budget of
// 100 * trials draws per proposition.
SuiteReport runSuite(const std::string& name, std::uint64_t seed,
                     std::uint64_t trials);

// Canonical JSON; byte-stable for equal inputs.
std::string reportJson(const SuiteReport& report);
std::string reportJson(const std::vector<SuiteReport>& reports);

// Closed-form answers computed straight from coordinates, independent of the
// construction recipes they are checked against.
namespace oracle {

Point midpoint(const Point& a, const Point& b);
// Projection of p onto Line(a,b); a != b or NoSolution.
Point foot(const Point& p, const Point& a, const Point& b);
// Line(a,b) meet Line(p,q); empty when parallel or coincident.
std::optional<Point> lineLine(const Point& a, const Point& b, const Point& p,
                              const Point& q);
// Empty when a,b,c are collinear.
std::optional<Point> circumcenter(const Point& a, const Point& b,
                                  const Point& c);
// Both intersections of Line(a,b) with the circle around c through d, ordered
// along a -> b; empty when the line misses.
std::optional<std::pair<Point, Point>> lineCircle(const Point& a,
                                                  const Point& b,
                                                  const Point& c,
                                                  const Point& d);
// Both intersections of two circles, the first on the left of the directed
// center line; empty when they miss or the centers coincide.
std::optional<std::pair<Point, Point>> circleCircle(const Point& c1,
                                                    const Point& t1,
                                                    const Point& c2,
                                                    const Point& t2);

}  // namespace oracle

struct ProbeReport {
  Num maxDisplacement2;  // squared displacement of the first output, exact
  Num ratio;             // sqrt(maxDisplacement2) / delta
};

// Evaluates the term at the base arguments and at every single-coordinate
// perturbation by +-delta; all evaluations must stay defined, else
// ProbeUndefined.
ProbeReport continuityProbe(const ScriptAst& term,
                            const std::vector<Point>& args, const Rat& delta);

}  // namespace tarski

#include <benchmark/benchmark.h>

#include "tarski/number.hpp"
#include "tarski/script.hpp"
#include "tarski/constructions.hpp"

using tarski::Num;
using tarski::Point;

static void BM_RationalAdd(benchmark::State& state) {
  Num a = Num::parse("355/113");
  Num b = Num::parse("-22/7");
  for (auto _ : state) {
    Num c = a + b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalAdd);

static void BM_RadicalMul(benchmark::State& state) {
  Num a = Num::parse("1 + sqrt(2)");
  Num b = Num::parse("3 - sqrt(2)/2");
  for (auto _ : state) {
    Num c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RadicalMul);

static void BM_CrossChainSign(benchmark::State& state) {
  Num a = Num::parse("sqrt(2) + sqrt(3)");
  Num b = Num::parse("sqrt(5 + 2*sqrt(6))");
  for (auto _ : state) {
    benchmark::DoNotOptimize((a - b).sign());
  }
}
BENCHMARK(BM_CrossChainSign);

static void BM_LineCircle(benchmark::State& state) {
  Point u{Num(-3), Num(1)}, v{Num(3), Num(-1)};
  Point c{Num(0), Num(0)}, d{Num(2), Num(1)};
  for (auto _ : state) {
    auto yz = tarski::ilc(u, v, c, d);
    benchmark::DoNotOptimize(yz.first.defined());
  }
}
BENCHMARK(BM_LineCircle);

static void BM_MidpointScript(benchmark::State& state) {
  tarski::ScriptAst ast = tarski::parseScript(
      "midpoint(a,b,s){ p = Perp(a,b,s) w = Perp(b,a,p) v = wit(b,a,p) "
      "q = ext(b,w,a,p) t = op(b,w,q,p,v) r = ext(ext(w,b,w,b),b,a,p) "
      "m = ip(b,r,q,p,t) return m }");
  std::vector<Point> args = {{Num(0), Num(0)}, {Num(2), Num(0)}, {Num(0), Num(1)}};
  for (auto _ : state) {
    auto res = tarski::evalScript(ast, args);
    benchmark::DoNotOptimize(res.defined);
  }
}
BENCHMARK(BM_MidpointScript);

static void BM_CircleCircle(benchmark::State& state) {
  tarski::CircleRef C{{Num(0), Num(0)}, {Num(2), Num(0)}};
  tarski::CircleRef K{{Num(3), Num(0)}, {Num(3), Num::sqrt(Num(5))}};
  Point r{Num(1), Num(4)};
  for (auto _ : state) {
    auto pq = tarski::circleCircle(C, K, r);
    benchmark::DoNotOptimize(pq.first.defined());
  }
}
BENCHMARK(BM_CircleCircle);

BENCHMARK_MAIN();

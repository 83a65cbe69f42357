#include "tarski/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tarski/constructions.hpp"

namespace tarski {

std::uint64_t SampleStream::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long SampleStream::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat SampleStream::coordinate() { return makeRat(range(-12, 12), range(1, 6)); }

Point SampleStream::point() {
  Num x{coordinate()};
  Num y{coordinate()};
  return {x, y};
}

namespace {

struct Outcome {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::vector<std::pair<std::string, Point>> config;
  std::vector<std::pair<std::string, std::string>> witness;
};

using Cfg = std::vector<std::pair<std::string, Point>>;
using Wit = std::vector<std::pair<std::string, std::string>>;

Outcome pass() { return {}; }
Outcome skip() { return {Outcome::Skip, {}, {}}; }
Outcome verdict(bool ok, Cfg cfg, Wit wit = {}) {
  if (ok) return pass();
  return {Outcome::Fail, std::move(cfg), std::move(wit)};
}

std::string lit(const Point& p) {
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}
std::string lit(const PartialPoint& p) {
  return p.defined() ? lit(p.point()) : std::string(reasonName(p.reason()));
}

struct Prop {
  const char* id;
  std::function<Outcome(SampleStream&, std::uint64_t)> run;
};

// --- sampling helpers -------------------------------------------------------

Point nonzeroVec(SampleStream& g) {
  for (;;) {
    Point w = g.point();
    if (!(w.x.isZero() && w.y.isZero())) return w;
  }
}

Num posParam(SampleStream& g) {  // > 0
  return Num(makeRat(g.range(1, 12), g.range(1, 6)));
}

Num interior01(SampleStream& g) {  // strictly inside (0, 1)
  long n = g.range(2, 6);
  return Num(makeRat(g.range(1, n - 1), n));
}

Num closed01(SampleStream& g) {  // [0, 1]
  long n = g.range(1, 6);
  return Num(makeRat(g.range(0, n), n));
}

Num halfOpen01(SampleStream& g) {  // [0, 1)
  long n = g.range(1, 6);
  return Num(makeRat(g.range(0, n - 1), n));
}

Num nonzeroParam(SampleStream& g) {
  for (;;) {
    Rat r = g.coordinate();
    if (r != 0) return Num(r);
  }
}

std::vector<Num> sortedParams(SampleStream& g, int k) {
  std::vector<Rat> raw;
  for (int i = 0; i < k; ++i) raw.push_back(g.coordinate());
  std::sort(raw.begin(), raw.end());
  std::vector<Num> out;
  for (const Rat& r : raw) out.emplace_back(r);
  return out;
}

void increasingPos(SampleStream& g, std::vector<Num>& out, int k) {
  for (;;) {
    std::vector<Rat> raw;
    for (int i = 0; i < k; ++i) raw.push_back(makeRat(g.range(1, 12), g.range(1, 6)));
    std::sort(raw.begin(), raw.end());
    bool dup = false;
    for (int i = 1; i < k; ++i)
      if (raw[i] == raw[i - 1]) dup = true;
    if (dup) continue;
    out.clear();
    for (const Rat& r : raw) out.emplace_back(r);
    return;
  }
}

// Exact plane isometry: optional mirror, then rotation by a point on the unit
// circle, then translation.  Rotations come out irrational, which is the point:
// congruences must hold across the whole field, not just over rationals.
struct Iso {
  Num c, s;
  Point u;
  bool mirror;
  Point operator()(const Point& p) const {
    Point v = mirror ? Point{p.x, -p.y} : p;
    return u + Point{c * v.x - s * v.y, s * v.x + c * v.y};
  }
};

Iso randomIso(SampleStream& g) {
  Num c{makeRat(g.range(-6, 6), 6)};
  Num s = Num::sqrt(Num(1) - c * c);
  if (g.next() & 1) s = -s;
  return {c, s, g.point(), (g.next() & 1) != 0};
}

Point offCenterLine(SampleStream& g, const Point& a, const Point& b) {
  for (;;) {
    Point r = g.point();
    if (!collinear3(a, b, r)) return r;
  }
}

const ScriptAst& midpointScript() {
  static const ScriptAst ast = parseScript(R"(midpoint(a,b,s){
   p = Perp(a,b,s)
   w = Perp(b,a,p)
   v = wit(b,a,p)
   q = ext(b,w,a,p)
   t = op(b,w,q,p,v)
   r = ext(ext(w,b,w,b),b,a,p)
   m = ip(b,r,q,p,t)
   return m
  }
)");
  return ast;
}

// --- axioms -----------------------------------------------------------------

std::vector<Prop> axiomProps() {
  std::vector<Prop> v;

  v.push_back({"equidistance-reflexive", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    return verdict(equidistant(a, b, b, a), {{"a", a}, {"b", b}});
  }});

  v.push_back({"equidistance-transitive", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    Iso f = randomIso(g), h = randomIso(g);
    Point p = f(a), q = f(b), r = h(a), s = h(b);
    bool ok = equidistant(a, b, p, q) && equidistant(a, b, r, s) &&
              equidistant(p, q, r, s);
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"q", q}, {"r", r}, {"s", s}});
  }});

  v.push_back({"null-segment-identity", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    bool ok = equidistant(a, b, c, c) == (a == b);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}});
  }});

  v.push_back({"segment-extension", [](SampleStream& g, std::uint64_t) {
    Point q = g.point(), a = g.point(), b = g.point(), c = g.point();
    if (q == a) return skip();
    PartialPoint x = ext(q, a, b, c);
    bool ok = x.defined() && between(q, a, x.point(), false) &&
              equidistant(a, x.point(), b, c);
    return verdict(ok, {{"q", q}, {"a", a}, {"b", b}, {"c", c}}, {{"x", lit(x)}});
  }});

  v.push_back({"five-segment", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point c = b + posParam(g) * (b - a);
    Point d = g.point();
    Iso f = randomIso(g);
    Point A = f(a), B = f(b), C = f(c), D = f(d);
    bool hyp = between(a, b, c, false) && between(A, B, C, false) &&
               equidistant(a, b, A, B) && equidistant(b, c, B, C) &&
               equidistant(a, d, A, D) && equidistant(b, d, B, D);
    bool ok = hyp && equidistant(c, d, C, D);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"A", A}, {"B", B}, {"C", C}, {"D", D}});
  }});

  v.push_back({"betweenness-irreflexive", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    return verdict(!between(a, b, a, true), {{"a", a}, {"b", b}});
  }});

  v.push_back({"inner-pasch-strict", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    Point p = a + interior01(g) * (c - a);
    Point q = b + interior01(g) * (c - b);
    PartialPoint x = ip(a, p, c, b, q);
    bool ok = x.defined() && between(p, x.point(), b, true) &&
              between(q, x.point(), a, true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"base-triangle-spans", [](SampleStream&, std::uint64_t) {
    BaseTriangle t = baseTriangle();
    return verdict(!collinear3(t.alpha, t.beta, t.gamma),
                   {{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}});
  }});

  v.push_back({"equidistant-triple-collinear", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point m = oracle::midpoint(a, b);
    Point dir = rot90(b - a);
    Point p = m + Num(g.coordinate()) * dir;
    Point q = m + Num(g.coordinate()) * dir;
    Point r = m + Num(g.coordinate()) * dir;
    bool ok = equidistant(p, a, p, b) && equidistant(q, a, q, b) &&
              equidistant(r, a, r, b) && collinear3(p, q, r);
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"q", q}, {"r", r}});
  }});

  v.push_back({"circumcenter-equidistant", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    PartialPoint x = center(a, b, c);
    bool ok = x.defined() && equidistant(x.point(), a, x.point(), b) &&
              equidistant(x.point(), a, x.point(), c);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}}, {{"x", lit(x)}});
  }});

  v.push_back({"betweenness-symmetric", [](SampleStream& g, std::uint64_t) {
    Point a = g.point();
    Point w = nonzeroVec(g);
    std::vector<Num> t;
    increasingPos(g, t, 2);
    Point b = a + t[0] * w, c = a + t[1] * w;
    bool ok = between(a, b, c, true) && between(c, b, a, true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}});
  }});

  v.push_back({"betweenness-inner-transitive", [](SampleStream& g, std::uint64_t) {
    Point a = g.point();
    Point w = nonzeroVec(g);
    std::vector<Num> t;
    increasingPos(g, t, 3);
    Point b = a + t[0] * w, c = a + t[1] * w, d = a + t[2] * w;
    bool ok = between(a, b, d, true) && between(b, c, d, true) &&
              between(a, b, c, true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  v.push_back({"line-circle-two-point", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point p = a + closed01(g) * (b - a);  // inside or on the circle
    Point w = nonzeroVec(g);
    Point u = p - w, vv = p + w;
    PartialPair yz = ilc(u, vv, a, b);
    if (!yz.first.defined() || !yz.second.defined())
      return verdict(false, {{"a", a}, {"b", b}, {"u", u}, {"v", vv}, {"p", p}},
                     {{"y", lit(yz.first)}, {"z", lit(yz.second)}});
    Point y = yz.first.point(), z = yz.second.point();
    bool ok = equidistant(a, y, a, b) && equidistant(a, z, a, b) &&
              between(y, p, z, false) && sameOrder(u, vv, y, z) &&
              (p == b || y != z);
    return verdict(ok, {{"a", a}, {"b", b}, {"u", u}, {"v", vv}, {"p", p}},
                   {{"y", lit(y)}, {"z", lit(z)}});
  }});

  v.push_back({"stability-by-decidability", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point(), d = g.point();
    // every predicate answers outright, so double negation changes nothing
    bool bb = between(a, b, c, true);
    bool ee = equidistant(a, b, c, d);
    bool qq = (a == b);
    bool ok = (bb == !!bb) && (ee == !!ee) && (qq == !!qq);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  return v;
}

// --- betweenness ------------------------------------------------------------

// All propositions quantify over points of one line; parameters are sampled
// sorted so the hypotheses hold by construction, ties included on purpose.
std::vector<Prop> betweennessProps() {
  std::vector<Prop> v;

  v.push_back({"right-endpoint", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    return verdict(between(a, b, b, false), {{"a", a}, {"b", b}});
  }});

  v.push_back({"reversal", [](SampleStream& g, std::uint64_t) {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 3);
    Point a = o + t[0] * w, b = o + t[1] * w, c = o + t[2] * w;
    bool ok = between(a, b, c, false) && between(c, b, a, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}});
  }});

  v.push_back({"left-endpoint", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    return verdict(between(a, a, b, false), {{"a", a}, {"b", b}});
  }});

  v.push_back({"swap-forces-equal", [](SampleStream& g, std::uint64_t) {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 3);
    Point a = o + t[0] * w, b = o + t[1] * w, c = o + t[2] * w;
    bool both = between(a, b, c, false) && between(b, a, c, false);
    bool ok = !both || (a == b);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}});
  }});

  auto fourOnLine = [](SampleStream& g, Point out[4]) {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 4);
    for (int i = 0; i < 4; ++i) out[i] = o + t[i] * w;
  };

  v.push_back({"inner-left", [fourOnLine](SampleStream& g, std::uint64_t) {
    Point p[4];
    fourOnLine(g, p);
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, d, false) && between(b, c, d, false) &&
              between(a, b, c, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  v.push_back({"inner-right", [fourOnLine](SampleStream& g, std::uint64_t) {
    Point p[4];
    fourOnLine(g, p);
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, d, false) && between(b, c, d, false) &&
              between(a, c, d, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  v.push_back({"shift-right", [fourOnLine](SampleStream& g, std::uint64_t) {
    Point p[4];
    fourOnLine(g, p);
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, c, false) && between(a, c, d, false) &&
              between(b, c, d, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  v.push_back({"shift-left", [fourOnLine](SampleStream& g, std::uint64_t) {
    Point p[4];
    fourOnLine(g, p);
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, c, false) && between(a, c, d, false) &&
              between(a, b, d, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  auto fourMiddleDistinct = [](SampleStream& g, Point out[4]) -> bool {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 4);
    if (t[1] == t[2]) return false;
    for (int i = 0; i < 4; ++i) out[i] = o + t[i] * w;
    return true;
  };

  v.push_back({"outer-right", [fourMiddleDistinct](SampleStream& g, std::uint64_t) {
    Point p[4];
    if (!fourMiddleDistinct(g, p)) return skip();
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, c, false) && between(b, c, d, false) && b != c &&
              between(a, c, d, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  v.push_back({"outer-left", [fourMiddleDistinct](SampleStream& g, std::uint64_t) {
    Point p[4];
    if (!fourMiddleDistinct(g, p)) return skip();
    const Point &a = p[0], &b = p[1], &c = p[2], &d = p[3];
    bool ok = between(a, b, c, false) && between(b, c, d, false) && b != c &&
              between(a, b, d, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
  }});

  return v;
}

// --- pasch ------------------------------------------------------------------

std::vector<Prop> paschProps() {
  std::vector<Prop> v;

  v.push_back({"inner-strict", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    Point p = a + interior01(g) * (c - a);
    Point q = b + interior01(g) * (c - b);
    PartialPoint x = ip(a, p, c, b, q);
    bool ok = x.defined() && between(p, x.point(), b, true) &&
              between(q, x.point(), a, true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"inner-closed-edges", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    Point p = a + interior01(g) * (c - a);
    Point q = b + closed01(g) * (c - b);  // q may land on b or on c
    PartialPoint x = ip(a, p, c, b, q);
    bool ok = x.defined() && between(p, x.point(), b, false) &&
              between(q, x.point(), a, false);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"continuous-both-sides", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), c = g.point();
    if (a == c) return skip();
    Point b = g.point();
    if (collinear3(a, c, b)) return skip();
    Point p = a + posParam(g) * (c - a);  // on the ray, either side of c
    Point q = c + interior01(g) * (b - c);
    PartialPoint x = continuousPasch(a, c, p, b, q);
    bool ok = x.defined() && between(b, x.point(), p, true) &&
              (!between(a, p, c, true) || between(a, x.point(), q, true)) &&
              (!between(a, c, p, true) || between(a, q, x.point(), true)) &&
              (p != c || x.point() == q);
    return verdict(ok, {{"a", a}, {"c", c}, {"p", p}, {"b", b}, {"q", q}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"plane-separation", [](SampleStream& g, std::uint64_t) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    Point a = g.point(), b = g.point(), c = g.point();
    if (!sideOfLine(a, b, L, SideMode::Same)) return skip();
    if (!sideOfLine(a, c, L, SideMode::Opposite)) return skip();
    bool ok = sideOfLine(b, c, L, SideMode::Opposite);
    return verdict(ok, {{"u", u}, {"w", w}, {"a", a}, {"b", b}, {"c", c}});
  }});

  return v;
}

// --- perpendicular ----------------------------------------------------------

std::vector<Prop> perpendicularProps() {
  std::vector<Prop> v;

  v.push_back({"dropped-equals-circle-free", [](SampleStream& g, std::uint64_t) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    Point p = g.point();
    if (onLine(p, L)) return skip();
    PartialPoint f1 = droppedPerp(p, L);
    PartialPoint f2 = guptaPerp(u, w, p);
    bool ok = f1.defined() && f2.defined() && f1.point() == f2.point() &&
              onLine(f1.point(), L) && dot(p - f1.point(), w - u).isZero();
    return verdict(ok, {{"u", u}, {"w", w}, {"p", p}},
                   {{"dropped", lit(f1)}, {"circle-free", lit(f2)}});
  }});

  v.push_back({"uniform-foot-off-line", [](SampleStream& g, std::uint64_t) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    Point p = g.point(), s = g.point();
    if (onLine(p, L) || onLine(s, L)) return skip();
    PartialPair up = uniformPerp(p, L, s);
    PartialPoint dropped = droppedPerp(p, L);
    bool ok = up.first.defined() && up.second.defined() && dropped.defined() &&
              up.first.point() == dropped.point() &&
              up.first.point() == oracle::foot(p, u, w) &&
              !onLine(up.second.point(), L) &&
              collinear3(up.first.point(), up.second.point(), p) &&
              dot(up.second.point() - up.first.point(), w - u).isZero();
    return verdict(ok, {{"u", u}, {"w", w}, {"p", p}, {"s", s}},
                   {{"foot", lit(up.first)}, {"head", lit(up.second)}});
  }});

  v.push_back({"uniform-foot-on-line", [](SampleStream& g, std::uint64_t) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    Point p = u + Num(g.coordinate()) * (w - u);
    Point s = g.point();
    if (onLine(s, L)) return skip();
    PartialPair up = uniformPerp(p, L, s);
    bool ok = up.first.defined() && up.second.defined() &&
              up.first.point() == p && !onLine(up.second.point(), L) &&
              dot(up.second.point() - p, w - u).isZero();
    return verdict(ok, {{"u", u}, {"w", w}, {"p", p}, {"s", s}},
                   {{"foot", lit(up.first)}, {"head", lit(up.second)}});
  }});

  v.push_back({"erected-side-witness", [](SampleStream& g, std::uint64_t) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    Point a = u + Num(g.coordinate()) * (w - u);
    Point s = g.point();
    if (onLine(s, L)) return skip();
    PartialPair pr = erectedPerp(a, L, s);
    bool ok = pr.first.defined() && pr.second.defined();
    if (ok) {
      Point p = pr.first.point(), r = pr.second.point();
      ok = !onLine(p, L) && dot(p - a, w - u).isZero() &&
           sideOfLine(p, s, L, SideMode::Opposite) && onLine(r, L) &&
           between(p, r, s, true);
    }
    return verdict(ok, {{"u", u}, {"w", w}, {"a", a}, {"s", s}},
                   {{"p", lit(pr.first)}, {"r", lit(pr.second)}});
  }});

  v.push_back({"right-angles-congruent", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Num t = nonzeroParam(g);
    Point c = b + t * rot90(a - b);
    Point B = g.point();
    Iso f = randomIso(g);
    Point A = B + (f(a) - f(b));  // |AB| = |ab| by isometry
    Num scale = Num::sqrt(dist2(b, c) / dist2(a, b));
    if (g.next() & 1) scale = -scale;
    Point C = B + scale * rot90(A - B);
    bool hyp = rightAngle(a, b, c) && rightAngle(A, B, C) &&
               equidistant(a, b, A, B) && equidistant(b, c, B, C);
    bool ok = hyp && equidistant(a, c, A, C);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"A", A}, {"B", B}, {"C", C}});
  }});

  v.push_back({"triangle-inequality", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    PartialPoint x = ext(a, b, b, c);  // |ax| = |ab| + |bc|
    bool ok = x.defined() && between(a, b, x.point(), false) &&
              equidistant(b, x.point(), b, c) &&
              segmentLess(a, c, a, x.point(), true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}}, {{"x", lit(x)}});
  }});

  v.push_back({"leg-below-hypotenuse", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point c = b + nonzeroParam(g) * rot90(a - b);
    bool ok = rightAngle(a, b, c) && segmentLess(b, a, a, c, true) &&
              segmentLess(b, c, a, c, true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}});
  }});

  return v;
}

// --- midpoint ---------------------------------------------------------------

std::vector<Prop> midpointProps() {
  std::vector<Prop> v;

  v.push_back({"script-exact", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), s = g.point();
    if (a == b || collinear3(a, b, s)) return skip();
    ConstructionResult res = evalScript(midpointScript(), {a, b, s});
    bool ok = res.defined && res.outputs[0].second == oracle::midpoint(a, b);
    return verdict(ok, {{"a", a}, {"b", b}, {"s", s}});
  }});

  v.push_back({"script-witness-free", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), s1 = g.point(), s2 = g.point();
    if (a == b || collinear3(a, b, s1) || collinear3(a, b, s2)) return skip();
    ConstructionResult r1 = evalScript(midpointScript(), {a, b, s1});
    ConstructionResult r2 = evalScript(midpointScript(), {a, b, s2});
    bool ok = r1.defined && r2.defined &&
              r1.outputs[0].second == r2.outputs[0].second;
    return verdict(ok, {{"a", a}, {"b", b}, {"s1", s1}, {"s2", s2}});
  }});

  v.push_back({"operator-exact", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), s = g.point();
    if (a == b || collinear3(a, b, s)) return skip();
    PartialPoint m = midpoint(a, b, s);
    PartialPoint m2 = midpoint(b, a, s);
    bool ok = m.defined() && m2.defined() &&
              m.point() == oracle::midpoint(a, b) &&
              m2.point() == m.point();
    return verdict(ok, {{"a", a}, {"b", b}, {"s", s}}, {{"m", lit(m)}});
  }});

  v.push_back({"isosceles-base", [](SampleStream& g, std::uint64_t) {
    Point y = g.point(), z = g.point();
    if (y == z) return skip();
    Point m = oracle::midpoint(y, z);
    Point x = m + nonzeroParam(g) * rot90(z - y);
    PartialPoint got = guptaMidpointIso(x, y, z);
    bool ok = equidistant(x, y, x, z) && got.defined() && got.point() == m;
    return verdict(ok, {{"x", x}, {"y", y}, {"z", z}}, {{"m", lit(got)}});
  }});

  return v;
}

// --- parallel-equiv ---------------------------------------------------------

std::vector<Prop> parallelProps() {
  std::vector<Prop> v;

  v.push_back({"euclid-five", [](SampleStream& g, std::uint64_t) {
    Point p = g.point(), q = g.point();
    if (p == q) return skip();
    Point r = g.point();
    if (collinear3(p, q, r)) return skip();
    Point t = oracle::midpoint(p, q);
    Point s = t + (t - r);
    Point a = q + interior01(g) * (r - q);
    bool hyp = between(q, a, r, true) && between(p, t, q, true) &&
               equidistant(p, r, q, s) && equidistant(p, t, q, t) &&
               equidistant(r, t, s, t) && !collinear3(s, q, p);
    PartialPoint x = il(p, a, s, q);
    bool ok = hyp && x.defined() && between(p, a, x.point(), true) &&
              between(s, q, x.point(), true);
    return verdict(ok, {{"p", p}, {"q", q}, {"r", r}, {"s", s}, {"t", t}, {"a", a}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"tarski-parallel", [](SampleStream& g, std::uint64_t) {
    Point b = g.point(), c = g.point();
    if (b == c) return skip();
    Point a = g.point();
    if (collinear3(b, c, a)) return skip();
    Point d = b + interior01(g) * (c - b);
    Point t = a + (Num(1) + posParam(g)) * (d - a);  // strictly beyond d
    PartialPoint k = parallelThrough(t, LineRef(b, c), a);
    if (!k.defined())
      return verdict(false, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"t", t}},
                     {{"k", lit(k)}});
    PartialPoint x = il(a, b, t, k.point());
    PartialPoint y = il(a, c, t, k.point());
    bool ok = between(a, d, t, true) && x.defined() && y.defined() &&
              between(a, b, x.point(), true) && between(a, c, y.point(), true) &&
              between(x.point(), t, y.point(), true);
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"t", t}},
                   {{"x", lit(x)}, {"y", lit(y)}});
  }});

  return v;
}

// --- continuity-equiv -------------------------------------------------------

std::vector<Prop> continuityProps() {
  std::vector<Prop> v;

  v.push_back({"line-circle-two-point-form", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point p = a + closed01(g) * (b - a);
    Point w = nonzeroVec(g);
    PartialPair yz = ilc(p - w, p + w, a, b);
    bool ok = yz.first.defined() && yz.second.defined();
    if (ok) {
      const Point &y = yz.first.point(), &z = yz.second.point();
      ok = equidistant(a, y, a, b) && equidistant(a, z, a, b) &&
           between(y, p, z, false) && (p == b || y != z);
    }
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"w", w}},
                   {{"y", lit(yz.first)}, {"z", lit(yz.second)}});
  }});

  v.push_back({"line-circle-one-point-form", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point p = a + halfOpen01(g) * (b - a);  // strictly inside
    Point w = nonzeroVec(g);
    PartialPair yz = ilc(p - w, p + w, a, b);
    bool ok = yz.first.defined() && yz.second.defined();
    if (ok) {
      const Point &y = yz.first.point(), &z = yz.second.point();
      ok = equidistant(a, y, a, b) && y != z && between(y, p, z, true);
    }
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"w", w}},
                   {{"y", lit(yz.first)}, {"z", lit(yz.second)}});
  }});

  v.push_back({"segment-circle-form", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point p = a + closed01(g) * (b - a);       // inside or on
    Num cc{makeRat(g.range(-6, 6), 6)};
    Num ss = Num::sqrt(Num(1) - cc * cc);
    if (g.next() & 1) ss = -ss;
    Point dir = b - a;
    Point spun{cc * dir.x - ss * dir.y, ss * dir.x + cc * dir.y};
    Point q = a + (Num(1) + posParam(g)) * spun;  // strictly outside
    if (p == q) return skip();
    PartialPair yz = ilc(p, q, a, b);
    bool ok = yz.second.defined();
    if (ok) {
      const Point& z = yz.second.point();
      ok = equidistant(a, z, a, b) && between(p, z, q, false);
    }
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"q", q}},
                   {{"z", lit(yz.second)}});
  }});

  v.push_back({"uniform-perp-case-free", [](SampleStream& g, std::uint64_t idx) {
    Point u = g.point(), w = g.point();
    if (u == w) return skip();
    LineRef L(u, w);
    // alternate crossing configurations with generic ones
    Point x = (idx % 2) ? u + Num(g.coordinate()) * (w - u) : g.point();
    Point s = g.point();
    if (onLine(s, L)) return skip();
    PartialPair up = uniformPerp(x, L, s);
    bool ok = up.first.defined() && up.second.defined() &&
              up.first.point() == oracle::foot(x, u, w) &&
              collinear3(up.first.point(), up.second.point(), x) &&
              dot(up.second.point() - up.first.point(), w - u).isZero();
    return verdict(ok, {{"u", u}, {"w", w}, {"x", x}, {"s", s}},
                   {{"foot", lit(up.first)}, {"head", lit(up.second)}});
  }});

  return v;
}

// --- circles ----------------------------------------------------------------

std::vector<Prop> circleProps() {
  std::vector<Prop> v;

  // Tangent and null-radius pairs are constructed on a schedule so they are
  // always exercised; everything else is rejection-sampled to meet.
  auto meetingPair = [](SampleStream& g, std::uint64_t idx, Point& c1, Point& t1,
                        Point& c2, Point& t2) -> bool {
    c1 = g.point();
    t1 = g.point();
    if (c1 == t1) return false;
    if (idx % 10 == 0) {  // external tangency at t1
      c2 = c1 + (Num(1) + posParam(g)) * (t1 - c1);
      t2 = t1;
      return true;
    }
    if (idx % 10 == 1) {  // null circle sitting on the first circle
      Num cc{makeRat(g.range(-6, 6), 6)};
      Num ss = Num::sqrt(Num(1) - cc * cc);
      if (g.next() & 1) ss = -ss;
      Point d = t1 - c1;
      c2 = c1 + Point{cc * d.x - ss * d.y, ss * d.x + cc * d.y};
      t2 = c2;
      return c1 != c2;
    }
    c2 = g.point();
    t2 = g.point();
    if (c1 == c2) return false;
    return oracle::circleCircle(c1, t1, c2, t2).has_value();
  };

  v.push_back({"intersection-vs-oracle", [meetingPair](SampleStream& g, std::uint64_t idx) {
    Point c1, t1, c2, t2;
    if (!meetingPair(g, idx, c1, t1, c2, t2)) return skip();
    Point r = offCenterLine(g, c1, c2);
    PartialPair got = circleCircle({c1, t1}, {c2, t2}, r);
    auto want = oracle::circleCircle(c1, t1, c2, t2);
    bool ok = want.has_value() && got.first.defined() && got.second.defined() &&
              got.first.point() == want->first && got.second.point() == want->second;
    return verdict(ok, {{"c1", c1}, {"t1", t1}, {"c2", c2}, {"t2", t2}, {"r", r}},
                   {{"first", lit(got.first)}, {"second", lit(got.second)}});
  }});

  v.push_back({"intersection-power-zero", [meetingPair](SampleStream& g, std::uint64_t idx) {
    Point c1, t1, c2, t2;
    if (!meetingPair(g, idx, c1, t1, c2, t2)) return skip();
    Point r = offCenterLine(g, c1, c2);
    CircleRef C{c1, t1}, K{c2, t2};
    PartialPair got = circleCircle(C, K, r);
    bool ok = got.first.defined() && got.second.defined() &&
              powerOfPoint(got.first.point(), C).isZero() &&
              powerOfPoint(got.first.point(), K).isZero() &&
              powerOfPoint(got.second.point(), C).isZero() &&
              powerOfPoint(got.second.point(), K).isZero();
    return verdict(ok, {{"c1", c1}, {"t1", t1}, {"c2", c2}, {"t2", t2}, {"r", r}},
                   {{"first", lit(got.first)}, {"second", lit(got.second)}});
  }});

  v.push_back({"power-chord-independent", [](SampleStream& g, std::uint64_t) {
    Point c = g.point(), t = g.point();
    if (c == t) return skip();
    Point b = g.point();
    CircleRef C{c, t};
    // aim each secant at a point inside the circle so it always meets
    auto secant = [&]() -> PartialPair {
      Point inside = c + halfOpen01(g) * (t - c);
      Point dir = (inside == b) ? nonzeroVec(g) : inside - b;
      return ilc(b, b + dir, c, t);
    };
    PartialPair cut1 = secant();
    PartialPair cut2 = secant();
    bool ok = cut1.first.defined() && cut1.second.defined() &&
              cut2.first.defined() && cut2.second.defined();
    if (ok) {
      Num pw = powerOfPoint(b, C);
      ok = dot(cut1.first.point() - b, cut1.second.point() - b) == pw &&
           dot(cut2.first.point() - b, cut2.second.point() - b) == pw;
    }
    return verdict(ok, {{"c", c}, {"t", t}, {"b", b}},
                   {{"a1", lit(cut1.first)}, {"c1", lit(cut1.second)},
                    {"a2", lit(cut2.first)}, {"c2", lit(cut2.second)}});
  }});

  v.push_back({"radical-axis-equal-powers", [](SampleStream& g, std::uint64_t idx) {
    Point c1 = g.point(), c2 = g.point();
    if (c1 == c2) return skip();
    Point t1, t2;
    if (idx % 5 == 0) {  // one null circle is allowed
      t1 = c1;
      t2 = g.point();
      if (t2 == c2) return skip();
    } else {
      t1 = g.point();
      t2 = g.point();
      if (t1 == c1 && t2 == c2) return skip();
    }
    Point r = offCenterLine(g, c1, c2);
    CircleRef C{c1, t1}, K{c2, t2};
    PartialPair axis = radicalAxis(C, K, r);
    bool ok = axis.first.defined() && axis.second.defined();
    if (ok) {
      const Point &f = axis.first.point(), &h = axis.second.point();
      ok = f != h && powerOfPoint(f, C) == powerOfPoint(f, K) &&
           powerOfPoint(h, C) == powerOfPoint(h, K) &&
           dot(h - f, c2 - c1).isZero();
    }
    return verdict(ok, {{"c1", c1}, {"t1", t1}, {"c2", c2}, {"t2", t2}, {"r", r}},
                   {{"foot", lit(axis.first)}, {"head", lit(axis.second)}});
  }});

  v.push_back({"tangent-perpendicular", [](SampleStream& g, std::uint64_t) {
    Point c = g.point(), a = g.point();
    if (c == a) return skip();
    Point w = rot90(a - c);
    Num k = nonzeroParam(g);
    Point u = a + k * w, vv = a - k * w;
    PartialPair yz = ilc(u, vv, c, a);
    bool ok = yz.first.defined() && yz.second.defined() &&
              yz.first.point() == a && yz.second.point() == a &&
              rightAngle(c, a, u);
    return verdict(ok, {{"c", c}, {"a", a}, {"u", u}, {"v", vv}},
                   {{"y", lit(yz.first)}, {"z", lit(yz.second)}});
  }});

  v.push_back({"diameter-right-angle", [](SampleStream& g, std::uint64_t) {
    Point x = g.point(), a = g.point();
    if (x == a) return skip();
    Point b = x + nonzeroParam(g) * rot90(a - x);
    Point m = oracle::midpoint(a, b);
    bool ok = rightAngle(a, x, b) && powerOfPoint(x, CircleRef{m, a}).isZero();
    return verdict(ok, {{"x", x}, {"a", a}, {"b", b}, {"m", m}});
  }});

  return v;
}

// --- il-elim ----------------------------------------------------------------

std::vector<Prop> ilElimProps() {
  std::vector<Prop> v;

  v.push_back({"intersect-by-construction", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), p = g.point(), r = g.point();
    if (a == b || p == r) return skip();
    if (cross(b - a, r - p).isZero()) return skip();
    PartialPoint direct = il(a, b, p, r);
    PartialPoint built = ilElim(a, b, p, r);
    bool ok = direct.defined() && built.defined() &&
              direct.point() == built.point();
    return verdict(ok, {{"a", a}, {"b", b}, {"p", p}, {"r", r}},
                   {{"direct", lit(direct)}, {"built", lit(built)}});
  }});

  v.push_back({"pasch-point-by-intersection", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    if (collinear3(a, b, c)) return skip();
    Point p = a + interior01(g) * (c - a);
    Point q = b + interior01(g) * (c - b);
    PartialPoint viaPasch = ip(a, p, c, b, q);
    PartialPoint viaLines = il(a, q, b, p);
    bool ok = viaPasch.defined() && viaLines.defined() &&
              viaPasch.point() == viaLines.point();
    return verdict(ok, {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}},
                   {{"pasch", lit(viaPasch)}, {"lines", lit(viaLines)}});
  }});

  return v;
}

// --- degenerate -------------------------------------------------------------

std::vector<Prop> degenerateProps() {
  std::vector<Prop> v;

  auto expectReason = [](const PartialPoint& x, UndefReason want) {
    return !x.defined() && x.reason() == want;
  };

  v.push_back({"extend-null-start", [expectReason](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point(), c = g.point();
    PartialPoint x = ext(a, a, b, c);
    return verdict(expectReason(x, UndefReason::NullSegment),
                   {{"a", a}, {"b", b}, {"c", c}}, {{"x", lit(x)}});
  }});

  v.push_back({"pasch-collinear", [expectReason](SampleStream& g, std::uint64_t) {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 3);
    Point a = o + t[0] * w, b = o + t[1] * w, c = o + t[2] * w;
    Point p = g.point(), q = g.point();
    PartialPoint x = ip(a, p, c, b, q);
    return verdict(expectReason(x, UndefReason::Collinear),
                   {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"q", q}},
                   {{"x", lit(x)}});
  }});

  v.push_back({"circumcenter-collinear", [expectReason](SampleStream& g, std::uint64_t) {
    Point o = g.point(), w = nonzeroVec(g);
    std::vector<Num> t = sortedParams(g, 3);
    Point a = o + t[0] * w, b = o + t[1] * w, c = o + t[2] * w;
    PartialPoint x = center(a, b, c);
    return verdict(expectReason(x, UndefReason::Collinear),
                   {{"a", a}, {"b", b}, {"c", c}}, {{"x", lit(x)}});
  }});

  v.push_back({"lines-parallel", [expectReason](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Point z = g.point();
    if (collinear3(a, b, z)) return skip();
    Point q = z + nonzeroParam(g) * (b - a);
    PartialPoint x = il(a, b, z, q);
    return verdict(expectReason(x, UndefReason::NoIntersection),
                   {{"a", a}, {"b", b}, {"z", z}, {"q", q}}, {{"x", lit(x)}});
  }});

  v.push_back({"lines-coincident", [expectReason](SampleStream& g, std::uint64_t) {
    Point a = g.point(), b = g.point();
    if (a == b) return skip();
    Num t1{g.coordinate()}, t2{g.coordinate()};
    if (t1 == t2) return skip();
    Point p = a + t1 * (b - a), q = a + t2 * (b - a);
    PartialPoint x = il(a, b, p, q);
    return verdict(expectReason(x, UndefReason::CoincidentLines),
                   {{"a", a}, {"b", b}, {"p", p}, {"q", q}}, {{"x", lit(x)}});
  }});

  v.push_back({"line-misses-circle", [expectReason](SampleStream& g, std::uint64_t) {
    Point c = g.point(), t = g.point();
    if (c == t) return skip();
    Point w = nonzeroVec(g);
    Point n = rot90(w);
    Num rr = dist2(c, t), nn = dot(n, n);
    Num lam(1);
    while ((lam * lam * nn - rr).sign() <= 0) lam = lam + lam;
    Point u = c + lam * n;  // farther from c than the radius, along the normal
    PartialPair yz = ilc(u, u + w, c, t);
    return verdict(expectReason(yz.first, UndefReason::OutsideCircle) &&
                       expectReason(yz.second, UndefReason::OutsideCircle),
                   {{"c", c}, {"t", t}, {"u", u}, {"w", w}},
                   {{"y", lit(yz.first)}});
  }});

  return v;
}

// --- density ----------------------------------------------------------------

std::vector<Prop> densityProps() {
  std::vector<Prop> v;

  v.push_back({"strict-interior-point", [](SampleStream& g, std::uint64_t) {
    Point a = g.point(), c = g.point();
    if (a == c) return skip();
    Point p = g.point();
    if (collinear3(a, c, p)) return skip();
    PartialPoint x = densityPoint(a, c, p);
    bool ok = x.defined() && between(a, x.point(), c, true);
    return verdict(ok, {{"a", a}, {"c", c}, {"p", p}}, {{"x", lit(x)}});
  }});

  v.push_back({"witness-preconditions", [](SampleStream& g, std::uint64_t idx) {
    Point a = g.point(), c = g.point(), p = g.point();
    if (idx % 2 == 0) {
      PartialPoint x = densityPoint(a, a, p);
      return verdict(!x.defined() && x.reason() == UndefReason::NullSegment,
                     {{"a", a}, {"p", p}}, {{"x", lit(x)}});
    }
    if (a == c) return skip();
    Point onL = a + Num(g.coordinate()) * (c - a);
    PartialPoint x = densityPoint(a, c, onL);
    return verdict(!x.defined() && x.reason() == UndefReason::Collinear,
                   {{"a", a}, {"c", c}, {"p", onL}}, {{"x", lit(x)}});
  }});

  return v;
}

// --- catalog ----------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const std::map<std::string, std::vector<Prop>>& catalog() {
  static const std::map<std::string, std::vector<Prop>> suites = [] {
    std::map<std::string, std::vector<Prop>> m;
    m.emplace("axioms", axiomProps());
    m.emplace("betweenness", betweennessProps());
    m.emplace("pasch", paschProps());
    m.emplace("perpendicular", perpendicularProps());
    m.emplace("midpoint", midpointProps());
    m.emplace("parallel-equiv", parallelProps());
    m.emplace("continuity-equiv", continuityProps());
    m.emplace("circles", circleProps());
    m.emplace("il-elim", ilElimProps());
    m.emplace("degenerate", degenerateProps());
    m.emplace("density", densityProps());
    return m;
  }();
  return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "axioms",         "betweenness", "pasch",   "perpendicular",
      "midpoint",       "parallel-equiv", "continuity-equiv",
      "circles",        "il-elim",     "degenerate", "density"};
  return names;
}

SuiteReport runSuite(const std::string& name, std::uint64_t seed,
                     std::uint64_t trials) {
  auto it = catalog().find(name);
  if (it == catalog().end())
    throw UnknownSuite("no suite named '" + name + "'");
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.trials = trials;
  for (const Prop& prop : it->second) {
    SampleStream g(seed ^ fnv1a(name + "/" + prop.id));
    std::uint64_t budget = 100 * trials;
    std::uint64_t done = 0;
    while (done < trials) {
      if (budget == 0)
        throw ResampleBudgetExhausted("sampler for '" + std::string(prop.id) +
                                      "' in suite '" + name +
                                      "' keeps missing its hypotheses");
      --budget;
      Outcome out = prop.run(g, done);
      if (out.kind == Outcome::Skip) {
        ++rep.skipped;
        continue;
      }
      if (out.kind == Outcome::Pass) {
        ++rep.passed;
      } else {
        TrialReport t;
        t.suite = name;
        t.trial = done;
        t.proposition = prop.id;
        t.verdict = "fail";
        t.config = std::move(out.config);
        t.witness = std::move(out.witness);
        rep.failures.push_back(std::move(t));
      }
      ++done;
    }
  }
  return rep;
}

}  // namespace tarski

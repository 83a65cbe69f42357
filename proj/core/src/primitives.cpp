#include "tarski/primitives.hpp"

namespace tarski {

const char* reasonName(UndefReason r) {
  switch (r) {
    case UndefReason::NullSegment:
      return "NullSegment";
    case UndefReason::Collinear:
      return "Collinear";
    case UndefReason::NoIntersection:
      return "NoIntersection";
    case UndefReason::CoincidentLines:
      return "CoincidentLines";
    case UndefReason::OutsideCircle:
      return "OutsideCircle";
    case UndefReason::BadArgument:
      return "BadArgument";
  }
  return "?";
}

PartialPoint ext(const Point& q, const Point& a, const Point& b, const Point& c) {
  if (q == a) return PartialPoint::undefined(UndefReason::NullSegment);
  Num len2 = dist2(b, c);
  if (len2.isZero()) return PartialPoint(a);
  Num t = Num::sqrt(len2 / dist2(q, a));
  return PartialPoint(a + t * (a - q));
}

PartialPoint il(const Point& a, const Point& b, const Point& p, const Point& q) {
  if (a == b || p == q) return PartialPoint::undefined(UndefReason::NullSegment);
  Num d = cross(b - a, q - p);
  if (d.isZero()) {
    bool coincident = collinear3(a, b, p) && collinear3(a, b, q);
    return PartialPoint::undefined(coincident ? UndefReason::CoincidentLines
                                              : UndefReason::NoIntersection);
  }
  Num t = cross(p - a, q - p) / d;
  return PartialPoint(a + t * (b - a));
}

PartialPoint ip(const Point& a, const Point& p, const Point& c, const Point& b,
                const Point& q) {
  if (collinear3(a, b, c)) return PartialPoint::undefined(UndefReason::Collinear);
  if (!between(a, p, c, true) || !between(b, q, c, false))
    return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPoint x = il(a, q, b, p);
  if (!x.defined()) return PartialPoint::undefined(UndefReason::BadArgument);
  return x;
}

PartialPoint center(const Point& a, const Point& b, const Point& c) {
  if (collinear3(a, b, c)) return PartialPoint::undefined(UndefReason::Collinear);
  // x solves u.x = u.(a+b)/2 and v.x = v.(a+c)/2 with u = b-a, v = c-a.
  Point u = b - a, v = c - a;
  Num half(makeRat(1, 2));
  Num ru = dot(u, half * (a + b));
  Num rv = dot(v, half * (a + c));
  Num det = cross(u, v);
  Num x = (ru * v.y - rv * u.y) / det;
  Num y = (u.x * rv - v.x * ru) / det;
  return PartialPoint(Point{x, y});
}

PartialPair ilc(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b) {
    auto u = PartialPoint::undefined(UndefReason::NullSegment);
    return {u, u};
  }
  // points a + t*w with |a + t*w - c|^2 = |cd|^2, ordered by t
  Point w = b - a, s = a - c;
  Num ww = dot(w, w);
  Num ws = dot(w, s);
  Num disc = ws * ws - ww * (dot(s, s) - dist2(c, d));
  if (disc.sign() < 0) {
    auto u = PartialPoint::undefined(UndefReason::OutsideCircle);
    return {u, u};
  }
  Num sd = Num::sqrt(disc);
  Num t1 = (-ws - sd) / ww;
  Num t2 = (-ws + sd) / ww;
  return {PartialPoint(a + t1 * w), PartialPoint(a + t2 * w)};
}

BaseTriangle baseTriangle() {
  return {Point{Num(0), Num(0)}, Point{Num(1), Num(0)}, Point{Num(0), Num(1)}};
}

}  // namespace tarski

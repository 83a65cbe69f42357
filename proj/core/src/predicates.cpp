#include "tarski/predicates.hpp"

namespace tarski {

namespace {

bool B(const Point& a, const Point& b, const Point& c) {
  return between(a, b, c, true);
}

bool T(const Point& a, const Point& b, const Point& c) {
  return between(a, b, c, false);
}

}  // namespace

bool collinear3(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a).isZero();
}

bool between(const Point& a, const Point& b, const Point& c, bool strict) {
  if (!collinear3(a, b, c)) return false;
  int d = dot(a - b, c - b).sign();
  return strict ? d < 0 : d <= 0;
}

bool equidistant(const Point& a, const Point& b, const Point& c, const Point& d) {
  return dist2(a, b) == dist2(c, d);
}

bool onLine(const Point& p, const LineRef& L) {
  return collinear3(L.p, L.q, p);
}

bool segmentLess(const Point& a, const Point& b, const Point& c, const Point& d,
                 bool strict) {
  int cmp = (dist2(a, b) - dist2(c, d)).sign();
  return strict ? cmp < 0 : cmp <= 0;
}

bool sideOfLine(const Point& a, const Point& b, const LineRef& L, SideMode mode) {
  Point dir = L.q - L.p;
  int sa = cross(dir, a - L.p).sign();
  int sb = cross(dir, b - L.p).sign();
  if (sa == 0 || sb == 0) return false;
  return mode == SideMode::Same ? sa == sb : sa == -sb;
}

bool sameOrder(const Point& a, const Point& b, const Point& c, const Point& d) {
  LineRef L(a, b);
  if (!onLine(c, L) || !onLine(d, L)) throw NotOnLine();
  if (T(c, a, b) && B(d, c, a)) return false;
  if (T(a, c, b) && B(d, c, b)) return false;
  if (T(a, b, c) && !T(a, c, d)) return false;
  return true;
}

bool rightAngle(const Point& a, const Point& b, const Point& c) {
  if (a == b || c == b) return false;
  return dist2(a, c) == dist2(a, b) + dist2(b, c);
}

Num powerOfPoint(const Point& b, const CircleRef& C) {
  return dist2(C.center, b) - dist2(C.center, C.through);
}

bool circleSide(const Point& p, const CircleRef& C, CircleSideMode mode) {
  int s = powerOfPoint(p, C).sign();
  switch (mode) {
    case CircleSideMode::StrictInside:
      return s < 0;
    case CircleSideMode::Inside:
      return s <= 0;
    case CircleSideMode::On:
      return s == 0;
    case CircleSideMode::Outside:
      return s >= 0;
    case CircleSideMode::StrictOutside:
      return s > 0;
  }
  return false;
}

}  // namespace tarski

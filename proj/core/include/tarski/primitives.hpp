#pragma once

// Partial construction operators.  Each returns a PartialPoint: a point when
// the operator's definedness condition holds, otherwise a reason code.
// Degenerate inputs never fabricate a point.

#include "tarski/predicates.hpp"

#include <optional>
#include <utility>

namespace tarski {

enum class UndefReason {
  NullSegment,
  Collinear,
  NoIntersection,
  CoincidentLines,
  OutsideCircle,
  BadArgument,
};

const char* reasonName(UndefReason r);

class PartialPoint {
 public:
  PartialPoint(Point p) : p_(std::move(p)), r_(UndefReason::BadArgument) {}
  static PartialPoint undefined(UndefReason r) { return PartialPoint(r); }

  bool defined() const { return p_.has_value(); }
  const Point& point() const {
    if (!p_) throw std::logic_error("access to an undefined point");
    return *p_;
  }
  UndefReason reason() const {
    if (p_) throw std::logic_error("defined point has no reason");
    return r_;
  }

 private:
  explicit PartialPoint(UndefReason r) : r_(r) {}
  std::optional<Point> p_;
  UndefReason r_;
};

using PartialPair = std::pair<PartialPoint, PartialPoint>;

// Extends segment qa beyond a by the length of bc.  Needs q != a; extension
// by a null segment is fine and returns a.
PartialPoint ext(const Point& q, const Point& a, const Point& b, const Point& c);

// Inner Pasch: needs B(a,p,c), T(b,q,c) and a,b,c not collinear; returns the
// crossing of segments pb and qa.
PartialPoint ip(const Point& a, const Point& p, const Point& c, const Point& b,
                const Point& q);

// Circumcenter; needs the three points non-collinear.
PartialPoint center(const Point& a, const Point& b, const Point& c);

// Both intersections of Line(a,b) with Circle(c,d), ordered along a -> b
// (sameOrder(a, b, first, second) holds).  Tangency gives equal points; a
// null circle is hit exactly when its center is on the line.
PartialPair ilc(const Point& a, const Point& b, const Point& c, const Point& d);

// Intersection of Line(a,b) and Line(p,q); needs both pairs distinct, lines
// neither coincident nor parallel.
PartialPoint il(const Point& a, const Point& b, const Point& p, const Point& q);

struct BaseTriangle {
  Point alpha, beta, gamma;
};

// The fixed non-collinear base points (0,0), (1,0), (0,1).
BaseTriangle baseTriangle();

}  // namespace tarski

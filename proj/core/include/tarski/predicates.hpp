#pragma once

// Exact geometric predicates.  Every answer is a hard boolean decided in the
// field; there is no epsilon anywhere.

#include "tarski/point.hpp"

namespace tarski {

struct NotOnLine : std::runtime_error {
  NotOnLine() : std::runtime_error("point not on the reference line") {}
};

// strict=true: b strictly between a and c (all distinct, collinear).
// strict=false: b on the closed segment ac.
bool between(const Point& a, const Point& b, const Point& c, bool strict);

// |ab| = |cd|, compared through squared lengths.
bool equidistant(const Point& a, const Point& b, const Point& c, const Point& d);

// Total and symmetric; true whenever two of the points coincide.
bool collinear3(const Point& a, const Point& b, const Point& c);

bool onLine(const Point& p, const LineRef& L);

// strict: |ab| < |cd|; otherwise |ab| <= |cd|.
bool segmentLess(const Point& a, const Point& b, const Point& c, const Point& d,
                 bool strict);

enum class SideMode { Same, Opposite };

// Same: both off L, strictly on one side.  Opposite: both off L, the open
// segment ab crosses L.
bool sideOfLine(const Point& a, const Point& b, const LineRef& L, SideMode mode);

// c and d must lie on Line(a,b), else NotOnLine.  True when d does not
// precede c in the direction a -> b.
bool sameOrder(const Point& a, const Point& b, const Point& c, const Point& d);

// The angle at b: a != b, c != b and |ac|^2 = |ab|^2 + |bc|^2.
bool rightAngle(const Point& a, const Point& b, const Point& c);

enum class CircleSideMode { StrictInside, Inside, On, Outside, StrictOutside };

bool circleSide(const Point& p, const CircleRef& C, CircleSideMode mode);

// |b - center|^2 - radius^2: negative inside, zero on, positive outside.
Num powerOfPoint(const Point& b, const CircleRef& C);

}  // namespace tarski

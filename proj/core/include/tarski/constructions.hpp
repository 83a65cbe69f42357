#pragma once

// Derived ruler-and-compass constructions.  Each is a straight-line
// composition of the partial operators in primitives.hpp; definedness
// conditions are checked up front and every intermediate undefined value
// propagates.  No construction branches on a degenerate case it could not
// decide by its stated hypotheses.

#include "tarski/primitives.hpp"

namespace tarski {

// A point different from x, uniformly in x.
Point eNeq(const Point& x);

// A point d with |ad| = |bc|; total in all arguments.
Point e2(const Point& a, const Point& b, const Point& c);

// Midpoint of yz when |xy| = |xz|, y != z and x,y,z not collinear, found by
// two inner-Pasch applications only.
PartialPoint guptaMidpointIso(const Point& x, const Point& y, const Point& z);

// A point strictly between a and c (needs a != c and p off Line(a,c)).
PartialPoint densityPoint(const Point& a, const Point& c, const Point& p);

// Case-free Pasch: p on the ray a->c (either side of c), B(c,q,b); the
// result x has B(b,x,p), plus B(a,x,q) when B(a,p,c) and B(a,q,x) when
// B(a,c,p).
PartialPoint continuousPasch(const Point& a, const Point& c, const Point& p,
                             const Point& b, const Point& q);

// Foot of the perpendicular from p to L (p off L), via circle and chord.
PartialPoint droppedPerp(const Point& p, const LineRef& L);

// Foot of the perpendicular from c to Line(a,b) using extensions and inner
// Pasch only; no circles anywhere.
PartialPoint guptaPerp(const Point& a, const Point& b, const Point& c);

// Perpendicular to L at a point a of L.  Returns (p, r): p off L with
// pa perpendicular to L, on the opposite side from s, and r on L with
// B(p,r,s).
PartialPair erectedPerp(const Point& a, const LineRef& L, const Point& s);

// Two-step perpendicular at a on L through circle Circle(c,a); needs ca not
// perpendicular to L.
PartialPoint shortErectedPerp(const Point& a, const LineRef& L, const Point& c);

// Midpoint of ab from a witness s off Line(a,b).
PartialPoint midpoint(const Point& a, const Point& b, const Point& s);

// Perpendicular to L through x with no case split on where x is.
// Returns (foot, head); foot is the projection of x on L, head is off L,
// and Line(foot, head) passes through x.  w is any point off L.
PartialPair uniformPerp(const Point& x, const LineRef& L, const Point& w);

// Reflection of x in L, case-free; fixes L pointwise.
PartialPoint uniformReflect(const Point& x, const LineRef& L, const Point& s);

// Second determining point k of the parallel to L through p; when p is on L
// the parallel is L itself.
PartialPoint parallelThrough(const Point& p, const LineRef& L, const Point& s);

// a + rot90(b - a); never collinear with a,b.
PartialPoint pointOffLine(const Point& a, const Point& b);

// A point on Line(q,r) that avoids Line(a,b); needs the two lines to meet in
// exactly one point.
PartialPoint pointOnKNotL(const Point& a, const Point& b, const Point& q,
                          const Point& r);

// Intersection of Line(a,b) and Line(p,r) built from ext/ip/center/ilc only;
// agrees with il wherever both are defined.
PartialPoint ilElim(const Point& a, const Point& b, const Point& p,
                    const Point& r);

// Two determining points of the radical axis of C and K (distinct centers,
// r off the center line).  Every point of the axis has equal powers.
PartialPair radicalAxis(const CircleRef& C, const CircleRef& K, const Point& r);

// Both intersection points of two circles; first the one on the left of the
// directed center line.  Tangency gives equal points.
PartialPair circleCircle(const CircleRef& C, const CircleRef& K, const Point& r);

}  // namespace tarski

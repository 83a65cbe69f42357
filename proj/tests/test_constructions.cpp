#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tarski/constructions.hpp"
#include "tarski/predicates.hpp"

using namespace tarski;

static Point P(long x, long y) { return {Num(x), Num(y)}; }
static Point Pq(long xn, long xd, long yn, long yd) {
  return {Num(makeRat(xn, xd)), Num(makeRat(yn, yd))};
}

TEST_CASE("a point distinct from any given point") {
  CHECK(eNeq(P(0, 0)) == P(1, 0));
  for (const Point& x : {P(1, 0), P(2, 0), P(-3, 7), Pq(1, 2, 0, 1)}) {
    CHECK(eNeq(x) != x);
  }
  // fixed point of the defining equation would need |ax| = 1 + |ax|
  const Point tricky{Num(2), Num(0)};
  CHECK(eNeq(tricky) == P(3, 0));
  CHECK(eNeq(P(3, 0)) != P(3, 0));
}

TEST_CASE("segment transport to a given endpoint") {
  CHECK(e2(P(0, 0), P(0, 0), P(0, 3)) == P(-3, 0));
  const Point a = P(1, 1);
  const Point d = e2(a, P(0, 0), P(1, 2));
  CHECK(dist2(a, d) == Num(5));
  // null target segment is fine
  CHECK(e2(P(4, 5), P(2, 2), P(2, 2)) == P(4, 5));
}

TEST_CASE("midpoint of the base of an isosceles triangle") {
  PartialPoint m = guptaMidpointIso(P(0, 2), P(-1, 0), P(1, 0));
  REQUIRE(m.defined());
  CHECK(m.point() == P(0, 0));

  PartialPoint m2 = guptaMidpointIso(P(1, 1), P(0, 0), P(2, 0));
  REQUIRE(m2.defined());
  CHECK(m2.point() == P(1, 0));

  // apex on the y-axis, radical legs |xy| = |xz| = sqrt(2)
  PartialPoint m3 = guptaMidpointIso(P(0, 0), P(1, 1), P(-1, 1));
  REQUIRE(m3.defined());
  CHECK(m3.point() == P(0, 1));

  CHECK(guptaMidpointIso(P(0, 2), P(1, 0), P(1, 0)).reason() ==
        UndefReason::NullSegment);
  CHECK(guptaMidpointIso(P(0, 0), P(1, 0), P(2, 0)).reason() ==
        UndefReason::Collinear);
  CHECK(guptaMidpointIso(P(0, 2), P(-1, 0), P(2, 0)).reason() ==
        UndefReason::BadArgument);
}

TEST_CASE("a point strictly between two given points") {
  PartialPoint b = densityPoint(P(0, 0), P(1, 0), P(0, 1));
  REQUIRE(b.defined());
  CHECK(b.point() == Point{Num(3) - Num::sqrt(Num(5)), Num(0)});
  CHECK(between(P(0, 0), b.point(), P(1, 0), true));

  PartialPoint c = densityPoint(P(2, 3), P(8, -1), P(0, 0));
  REQUIRE(c.defined());
  CHECK(between(P(2, 3), c.point(), P(8, -1), true));

  CHECK(densityPoint(P(1, 1), P(1, 1), P(0, 0)).reason() ==
        UndefReason::NullSegment);
  CHECK(densityPoint(P(0, 0), P(2, 0), P(1, 0)).reason() ==
        UndefReason::Collinear);
}

TEST_CASE("case-free Pasch point") {
  // p beyond c on the ray
  PartialPoint x1 = continuousPasch(P(0, 0), P(1, 0), P(2, 0), P(1, 2), P(1, 1));
  REQUIRE(x1.defined());
  CHECK(x1.point() == Pq(4, 3, 4, 3));
  CHECK(between(P(1, 2), x1.point(), P(2, 0), true));

  // p strictly between a and c
  PartialPoint x2 = continuousPasch(P(0, 0), P(2, 0), P(1, 0), P(0, 2), P(1, 1));
  REQUIRE(x2.defined());
  CHECK(x2.point() == Pq(2, 3, 2, 3));
  CHECK(between(P(0, 0), x2.point(), P(1, 1), false));

  // p = c collapses to the cut point itself
  PartialPoint x3 = continuousPasch(P(0, 0), P(1, 0), P(1, 0), P(1, 2), P(1, 1));
  REQUIRE(x3.defined());
  CHECK(x3.point() == P(1, 1));

  CHECK(continuousPasch(P(0, 0), P(0, 0), P(1, 0), P(1, 2), P(1, 1)).reason() ==
        UndefReason::NullSegment);
  CHECK(continuousPasch(P(0, 0), P(1, 0), P(0, 0), P(1, 2), P(1, 1)).reason() ==
        UndefReason::BadArgument);
  CHECK(continuousPasch(P(0, 0), P(1, 0), P(1, 1), P(1, 2), P(1, 1)).reason() ==
        UndefReason::BadArgument);
  CHECK(continuousPasch(P(0, 0), P(1, 0), P(-1, 0), P(1, 2), P(1, 1)).reason() ==
        UndefReason::BadArgument);
  CHECK(continuousPasch(P(0, 0), P(1, 0), P(2, 0), P(3, 0), P(1, 1)).reason() ==
        UndefReason::Collinear);
  CHECK(continuousPasch(P(0, 0), P(1, 0), P(2, 0), P(1, 2), P(1, 3)).reason() ==
        UndefReason::BadArgument);
}

TEST_CASE("perpendicular foot via chord midpoint") {
  const LineRef xs(P(0, 0), P(1, 0));
  PartialPoint f1 = droppedPerp(P(1, 2), xs);
  REQUIRE(f1.defined());
  CHECK(f1.point() == P(1, 0));

  PartialPoint f2 = droppedPerp(P(-3, 5), xs);
  REQUIRE(f2.defined());
  CHECK(f2.point() == P(-3, 0));

  PartialPoint f3 = droppedPerp(P(1, 0), LineRef(P(0, 0), P(1, 1)));
  REQUIRE(f3.defined());
  CHECK(f3.point() == Pq(1, 2, 1, 2));

  PartialPoint f4 = droppedPerp({Num(0), Num::sqrt(Num(2))}, xs);
  REQUIRE(f4.defined());
  CHECK(f4.point() == P(0, 0));

  CHECK(droppedPerp(P(7, 0), xs).reason() == UndefReason::BadArgument);
}

TEST_CASE("perpendicular foot without circles") {
  PartialPoint f1 = guptaPerp(P(0, 0), P(4, 0), P(1, 2));
  REQUIRE(f1.defined());
  CHECK(f1.point() == P(1, 0));

  PartialPoint f2 = guptaPerp(P(-1, 0), P(1, 0), P(0, 2));
  REQUIRE(f2.defined());
  CHECK(f2.point() == P(0, 0));

  // agrees with the chord construction on a slanted line
  const Point a = P(0, 0), b = P(2, 2), c = P(3, 0);
  PartialPoint g = guptaPerp(a, b, c);
  PartialPoint d = droppedPerp(c, LineRef(a, b));
  REQUIRE(g.defined());
  REQUIRE(d.defined());
  CHECK(g.point() == d.point());

  CHECK(guptaPerp(P(1, 1), P(1, 1), P(0, 0)).reason() == UndefReason::NullSegment);
  CHECK(guptaPerp(P(0, 0), P(2, 0), P(1, 0)).reason() == UndefReason::Collinear);
}

TEST_CASE("perpendicular erected at a point of the line") {
  const LineRef L(P(0, 0), P(1, 0));
  PartialPair pr = erectedPerp(P(0, 0), L, P(1, 1));
  REQUIRE(pr.first.defined());
  REQUIRE(pr.second.defined());
  const Point p = pr.first.point();
  const Point r = pr.second.point();
  CHECK(p == Pq(0, 1, -1, 2));
  CHECK(r == Pq(1, 3, 0, 1));
  CHECK(dot(p - P(0, 0), P(1, 0) - P(0, 0)).isZero());
  CHECK(sideOfLine(p, P(1, 1), L, SideMode::Opposite));
  CHECK(onLine(r, L));
  CHECK(between(p, r, P(1, 1), true));

  // erect at an interior point of the representation
  PartialPair pr2 = erectedPerp(P(3, 0), L, P(-2, -5));
  REQUIRE(pr2.first.defined());
  const Point p2 = pr2.first.point();
  CHECK(p2.x == Num(3));
  CHECK(p2.y.sign() > 0);  // opposite side from the witness
  CHECK(between(p2, pr2.second.point(), P(-2, -5), true));

  CHECK(erectedPerp(P(0, 1), L, P(1, 1)).first.reason() ==
        UndefReason::BadArgument);
  CHECK(erectedPerp(P(0, 0), L, P(4, 0)).first.reason() ==
        UndefReason::BadArgument);
}

TEST_CASE("perpendicular erected through a circle") {
  const LineRef L(P(0, 0), P(1, 0));
  PartialPoint e = shortErectedPerp(P(0, 0), L, P(1, 1));
  REQUIRE(e.defined());
  CHECK(e.point() == P(0, 2));

  // the tilted witness still lands on the perpendicular at a
  PartialPoint e2v = shortErectedPerp(P(2, 0), L, P(3, 2));
  REQUIRE(e2v.defined());
  CHECK(e2v.point().x == Num(2));
  CHECK(e2v.point().y != Num(0));

  // witness already perpendicular: the circle is tangent
  CHECK(shortErectedPerp(P(0, 0), L, P(0, 1)).reason() ==
        UndefReason::BadArgument);
  CHECK(shortErectedPerp(P(0, 1), L, P(1, 1)).reason() ==
        UndefReason::BadArgument);
  CHECK(shortErectedPerp(P(0, 0), L, P(5, 0)).reason() ==
        UndefReason::BadArgument);
}

TEST_CASE("midpoint from a non-collinear witness") {
  PartialPoint m1 = midpoint(P(0, 0), P(2, 0), P(0, 1));
  REQUIRE(m1.defined());
  CHECK(m1.point() == P(1, 0));

  PartialPoint m2 = midpoint(P(0, 0), P(1, 1), P(1, 0));
  REQUIRE(m2.defined());
  CHECK(m2.point() == Pq(1, 2, 1, 2));

  // the result does not depend on the witness
  PartialPoint m3 = midpoint(P(0, 0), P(2, 0), P(5, 3));
  PartialPoint m4 = midpoint(P(0, 0), P(2, 0), P(-1, -7));
  REQUIRE(m3.defined());
  REQUIRE(m4.defined());
  CHECK(m3.point() == P(1, 0));
  CHECK(m4.point() == P(1, 0));

  // radical endpoint halves exactly
  const Point b{Num::sqrt(Num(2)), Num(0)};
  PartialPoint m5 = midpoint(P(0, 0), b, P(0, 1));
  REQUIRE(m5.defined());
  CHECK(m5.point() == Point{Num::sqrt(Num(2)) / Num(2), Num(0)});

  CHECK(midpoint(P(1, 1), P(1, 1), P(0, 0)).reason() == UndefReason::NullSegment);
  CHECK(midpoint(P(0, 0), P(2, 0), P(1, 0)).reason() == UndefReason::Collinear);
}

TEST_CASE("perpendicular through any point, no case split") {
  const LineRef L(P(0, 0), P(1, 0));
  PartialPair d1 = uniformPerp(P(3, 5), L, P(0, 1));
  REQUIRE(d1.first.defined());
  CHECK(d1.first.point() == P(3, 0));
  CHECK(collinear3(P(3, 5), d1.first.point(), d1.second.point()));
  CHECK_FALSE(onLine(d1.second.point(), L));

  // point on the line: the foot is the point itself
  PartialPair d2 = uniformPerp(P(2, 0), L, P(0, 1));
  REQUIRE(d2.first.defined());
  CHECK(d2.first.point() == P(2, 0));
  CHECK(dot(d2.second.point() - P(2, 0), P(1, 0) - P(0, 0)).isZero());

  PartialPair d3 = uniformPerp(P(-1, -2), LineRef(P(0, 0), P(1, 1)), P(1, 0));
  REQUIRE(d3.first.defined());
  CHECK(d3.first.point() == Pq(-3, 2, -3, 2));

  CHECK(uniformPerp(P(3, 5), L, P(4, 0)).first.reason() ==
        UndefReason::BadArgument);
}

TEST_CASE("reflection across a line") {
  const LineRef L(P(0, 0), P(1, 0));
  const Point w = P(0, 1);
  PartialPoint r1 = uniformReflect(P(1, 3), L, w);
  REQUIRE(r1.defined());
  CHECK(r1.point() == P(1, -3));

  PartialPoint fixed = uniformReflect(P(4, 0), L, w);
  REQUIRE(fixed.defined());
  CHECK(fixed.point() == P(4, 0));

  // involution on a radical point
  const Point z{Num::sqrt(Num(2)), Num(1) + Num::sqrt(Num(2))};
  PartialPoint once = uniformReflect(z, L, w);
  REQUIRE(once.defined());
  CHECK(once.point() == Point{Num::sqrt(Num(2)), -(Num(1) + Num::sqrt(Num(2)))});
  PartialPoint twice = uniformReflect(once.point(), L, w);
  REQUIRE(twice.defined());
  CHECK(twice.point() == z);

  // isometry
  PartialPoint ra = uniformReflect(P(2, 5), L, w);
  PartialPoint rb = uniformReflect(P(-1, 1), L, w);
  REQUIRE(ra.defined());
  REQUIRE(rb.defined());
  CHECK(dist2(ra.point(), rb.point()) == dist2(P(2, 5), P(-1, 1)));

  CHECK(uniformReflect(P(1, 3), L, P(2, 0)).reason() == UndefReason::BadArgument);
}

TEST_CASE("parallel through a point") {
  const LineRef L(P(0, 0), P(1, 0));
  PartialPoint k1 = parallelThrough(P(0, 2), L, P(0, 1));
  REQUIRE(k1.defined());
  CHECK(k1.point().y == Num(2));
  CHECK(k1.point() != P(0, 2));

  // point on the line: the parallel is the line itself
  PartialPoint k2 = parallelThrough(P(3, 0), L, P(0, 1));
  REQUIRE(k2.defined());
  CHECK(k2.point().y == Num(0));
  CHECK(k2.point() != P(3, 0));

  PartialPoint k3 = parallelThrough(P(0, 0), LineRef(P(1, 1), P(2, 3)), P(4, 0));
  REQUIRE(k3.defined());
  CHECK(cross(k3.point() - P(0, 0), P(2, 3) - P(1, 1)).isZero());

  CHECK(parallelThrough(P(0, 2), L, P(5, 0)).reason() == UndefReason::BadArgument);
}

TEST_CASE("a point off a given line") {
  PartialPoint o1 = pointOffLine(P(0, 0), P(1, 0));
  REQUIRE(o1.defined());
  CHECK(o1.point() == P(0, 1));

  PartialPoint o2 = pointOffLine(P(0, 0), P(0, 2));
  REQUIRE(o2.defined());
  CHECK(o2.point() == P(-2, 0));

  PartialPoint o3 = pointOffLine(P(2, 3), P(-1, 5));
  REQUIRE(o3.defined());
  CHECK_FALSE(collinear3(P(2, 3), P(-1, 5), o3.point()));

  CHECK(pointOffLine(P(1, 1), P(1, 1)).reason() == UndefReason::NullSegment);
}

TEST_CASE("a point of one line avoiding another") {
  struct Case {
    Point a, b, q, r;
  };
  const Case cases[] = {
      {P(0, 0), P(1, 0), P(0, 0), P(0, 1)},
      {P(0, 0), P(1, 0), P(1, 1), P(2, 3)},
      {P(2, 1), P(5, -1), P(0, 0), P(1, 1)},
      {P(0, 0), P(0, 1), P(3, 1), P(0, 4)},
  };
  for (const Case& c : cases) {
    PartialPoint s = pointOnKNotL(c.a, c.b, c.q, c.r);
    REQUIRE(s.defined());
    CHECK(collinear3(c.q, c.r, s.point()));
    CHECK_FALSE(collinear3(c.a, c.b, s.point()));
  }

  CHECK(pointOnKNotL(P(0, 0), P(1, 0), P(0, 1), P(2, 1)).reason() ==
        UndefReason::NoIntersection);
  CHECK(pointOnKNotL(P(0, 0), P(2, 0), P(5, 0), P(7, 0)).reason() ==
        UndefReason::CoincidentLines);
  CHECK(pointOnKNotL(P(0, 0), P(0, 0), P(0, 1), P(2, 1)).reason() ==
        UndefReason::NullSegment);
  CHECK(pointOnKNotL(P(0, 0), P(1, 0), P(2, 1), P(2, 1)).reason() ==
        UndefReason::NullSegment);
}

TEST_CASE("line intersection from segment and circle steps only") {
  PartialPoint i1 = ilElim(P(0, 0), P(1, 0), P(1, 2), P(1, -1));
  REQUIRE(i1.defined());
  CHECK(i1.point() == P(1, 0));

  PartialPoint i2 = ilElim(P(0, 0), P(1, 1), P(2, 0), P(0, 2));
  REQUIRE(i2.defined());
  CHECK(i2.point() == P(1, 1));

  const Num s2 = Num::sqrt(Num(2));
  PartialPoint i3 = ilElim(P(0, 0), P(1, 0), {s2, Num(1)}, {s2, Num(-3)});
  REQUIRE(i3.defined());
  CHECK(i3.point() == Point{s2, Num(0)});

  // agreement with the primitive on a handful of slanted configurations
  const Point quads[][4] = {
      {P(0, 0), P(3, 1), P(0, 2), P(4, -1)},
      {P(-2, -1), P(1, 2), P(-2, 3), P(2, -2)},
      {P(0, 5), P(1, 4), P(-3, 0), P(2, 1)},
  };
  for (const auto& c : quads) {
    PartialPoint viaElim = ilElim(c[0], c[1], c[2], c[3]);
    PartialPoint direct = il(c[0], c[1], c[2], c[3]);
    REQUIRE(viaElim.defined());
    REQUIRE(direct.defined());
    CHECK(viaElim.point() == direct.point());
  }

  CHECK(ilElim(P(0, 0), P(1, 0), P(0, 1), P(2, 1)).reason() ==
        UndefReason::NoIntersection);
  CHECK(ilElim(P(0, 0), P(2, 0), P(5, 0), P(7, 0)).reason() ==
        UndefReason::CoincidentLines);
  CHECK(ilElim(P(1, 1), P(1, 1), P(0, 1), P(2, 1)).reason() ==
        UndefReason::NullSegment);
}

TEST_CASE("radical axis of two circles") {
  const CircleRef C{P(0, 0), P(2, 0)};
  const CircleRef K{P(3, 0), {Num(3), Num::sqrt(Num(5))}};
  PartialPair ax = radicalAxis(C, K, P(0, 1));
  REQUIRE(ax.first.defined());
  REQUIRE(ax.second.defined());
  const Point f = ax.first.point();
  const Point h = ax.second.point();
  CHECK(f == Pq(4, 3, 0, 1));
  CHECK(dot(h - f, P(3, 0) - P(0, 0)).isZero());
  CHECK(powerOfPoint(f, C) == powerOfPoint(f, K));
  CHECK(powerOfPoint(h, C) == powerOfPoint(h, K));

  // one null circle contributes its center
  const CircleRef Null{P(0, 0), P(0, 0)};
  const CircleRef K2{P(3, 0), P(5, 0)};
  PartialPair ax2 = radicalAxis(Null, K2, P(1, 1));
  REQUIRE(ax2.first.defined());
  CHECK(ax2.first.point() == Pq(5, 6, 0, 1));
  CHECK(powerOfPoint(ax2.second.point(), Null) ==
        powerOfPoint(ax2.second.point(), K2));

  // two null circles have no radical axis through this construction
  const CircleRef Null2{P(3, 0), P(3, 0)};
  CHECK(radicalAxis(Null, Null2, P(1, 1)).first.reason() ==
        UndefReason::NoIntersection);

  CHECK(radicalAxis(C, CircleRef{P(0, 0), P(1, 1)}, P(0, 1)).first.reason() ==
        UndefReason::NullSegment);
  CHECK(radicalAxis(C, K, P(2, 0)).first.reason() == UndefReason::BadArgument);
}

TEST_CASE("intersection points of two circles") {
  const Num r5 = Num::sqrt(Num(5));
  const CircleRef C{P(0, 0), P(2, 0)};
  const CircleRef K{P(3, 0), {Num(3), r5}};
  PartialPair cut = circleCircle(C, K, P(0, 1));
  REQUIRE(cut.first.defined());
  REQUIRE(cut.second.defined());
  const Point top{Num(makeRat(4, 3)), Num(2) * r5 / Num(3)};
  const Point bot{Num(makeRat(4, 3)), Num(-2) * r5 / Num(3)};
  CHECK(cut.first.point() == top);
  CHECK(cut.second.point() == bot);
  for (const PartialPoint& pp : {cut.first, cut.second}) {
    CHECK(powerOfPoint(pp.point(), C).isZero());
    CHECK(powerOfPoint(pp.point(), K).isZero());
  }

  // swapping the circles swaps the oriented pair
  PartialPair swapped = circleCircle(K, C, P(0, 1));
  REQUIRE(swapped.first.defined());
  CHECK(swapped.first.point() == bot);
  CHECK(swapped.second.point() == top);

  // external tangency gives the common point twice
  const CircleRef T1{P(0, 0), P(1, 0)};
  const CircleRef T2{P(2, 0), P(1, 0)};
  PartialPair tang = circleCircle(T1, T2, P(0, 1));
  REQUIRE(tang.first.defined());
  CHECK(tang.first.point() == P(1, 0));
  CHECK(tang.second.point() == P(1, 0));

  // a null circle on the other circle is a tangency at its center
  const CircleRef Null{P(0, 0), P(0, 0)};
  const CircleRef Through{P(2, 0), P(0, 0)};
  PartialPair nt = circleCircle(Null, Through, P(0, 1));
  REQUIRE(nt.first.defined());
  CHECK(nt.first.point() == P(0, 0));
  CHECK(nt.second.point() == P(0, 0));

  // separated and nested circles miss
  CHECK(circleCircle(T1, CircleRef{P(5, 0), P(6, 0)}, P(0, 1)).first.reason() ==
        UndefReason::NoIntersection);
  CHECK(circleCircle(CircleRef{P(0, 0), P(5, 0)}, CircleRef{P(1, 0), P(2, 0)},
                     P(0, 1))
            .first.reason() == UndefReason::NoIntersection);

  CHECK(circleCircle(C, CircleRef{P(0, 0), P(3, 0)}, P(0, 1)).first.reason() ==
        UndefReason::NullSegment);
  CHECK(circleCircle(C, K, P(7, 0)).first.reason() == UndefReason::BadArgument);
}

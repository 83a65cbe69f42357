#include "tarski/constructions.hpp"

#include "tarski/predicates.hpp"

namespace tarski {

namespace {

PartialPair bothUndefined(UndefReason r) {
  PartialPoint u = PartialPoint::undefined(r);
  return {u, u};
}

}  // namespace

Point eNeq(const Point& x) {
  // Lay off |alpha x| on the base line beyond beta: the result is at
  // 1 + |alpha x| from alpha, which can never equal |alpha x|.
  const BaseTriangle base = baseTriangle();
  return ext(base.alpha, base.beta, base.alpha, x).point();
}

Point e2(const Point& a, const Point& b, const Point& c) {
  return ext(eNeq(a), a, b, c).point();
}

PartialPoint guptaMidpointIso(const Point& x, const Point& y, const Point& z) {
  if (y == z) return PartialPoint::undefined(UndefReason::NullSegment);
  if (collinear3(x, y, z)) return PartialPoint::undefined(UndefReason::Collinear);
  if (dist2(x, y) != dist2(x, z))
    return PartialPoint::undefined(UndefReason::BadArgument);
  const BaseTriangle base = baseTriangle();
  PartialPoint t = ext(x, y, base.alpha, base.beta);
  if (!t.defined()) return t;
  PartialPoint u = ext(x, z, base.alpha, base.beta);
  if (!u.defined()) return u;
  // Both inner-Pasch hypotheses hold: the legs are equal, so the cross
  // segments meet inside the triangle.
  PartialPoint v = ip(u.point(), z, x, t.point(), y);
  if (!v.defined()) return v;
  return ip(x, y, t.point(), z, v.point());
}

PartialPoint densityPoint(const Point& a, const Point& c, const Point& p) {
  if (a == c) return PartialPoint::undefined(UndefReason::NullSegment);
  if (collinear3(a, c, p)) return PartialPoint::undefined(UndefReason::Collinear);
  PartialPoint r = ext(a, p, a, c);
  if (!r.defined()) return r;
  PartialPoint s = ext(r.point(), c, a, c);
  if (!s.defined()) return s;
  return ip(s.point(), c, r.point(), a, p);
}

PartialPoint continuousPasch(const Point& a, const Point& c, const Point& p,
                             const Point& b, const Point& q) {
  if (c == a) return PartialPoint::undefined(UndefReason::NullSegment);
  // p must lie on the ray from a through c, away from a.
  if (p == a || !collinear3(a, c, p) || between(p, a, c, true))
    return PartialPoint::undefined(UndefReason::BadArgument);
  if (collinear3(a, c, b)) return PartialPoint::undefined(UndefReason::Collinear);
  if (!between(c, q, b, true))
    return PartialPoint::undefined(UndefReason::BadArgument);
  // d is beyond c and beyond p on the ray, so T(a,p,d) holds and outer
  // Pasch applies twice.  Neither intersection can degenerate here.
  PartialPoint d = ext(a, c, a, p);
  if (!d.defined()) return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPoint r = il(a, q, b, d.point());
  if (!r.defined()) return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPoint x = il(a, r.point(), b, p);
  if (!x.defined()) return PartialPoint::undefined(UndefReason::BadArgument);
  return x;
}

PartialPoint droppedPerp(const Point& p, const LineRef& L) {
  if (onLine(p, L))
    return PartialPoint::undefined(UndefReason::BadArgument);
  // Radius |p L.p| + |L.p L.q| puts L.p strictly inside the circle, so the
  // line cuts it in two distinct points.
  PartialPoint r = ext(p, L.p, L.p, L.q);
  if (!r.defined()) return r;
  PartialPair cut = ilc(L.p, L.q, p, r.point());
  if (!cut.first.defined()) return cut.first;
  return guptaMidpointIso(p, cut.first.point(), cut.second.point());
}

PartialPoint guptaPerp(const Point& a, const Point& b, const Point& c) {
  if (a == b) return PartialPoint::undefined(UndefReason::NullSegment);
  if (collinear3(a, b, c)) return PartialPoint::undefined(UndefReason::Collinear);
  PartialPoint y = ext(b, a, a, c);
  if (!y.defined()) return y;
  PartialPoint p = guptaMidpointIso(a, c, y.point());
  if (!p.defined()) return p;
  PartialPoint q = ext(c, y.point(), a, c);
  if (!q.defined()) return q;
  PartialPoint z = ext(a, y.point(), p.point(), y.point());
  if (!z.defined()) return z;
  PartialPoint qq = ext(q.point(), z.point(), q.point(), z.point());
  if (!qq.defined()) return qq;
  PartialPoint cc = ext(qq.point(), y.point(), y.point(), c);
  if (!cc.defined()) return cc;
  return guptaMidpointIso(y.point(), c, cc.point());
}

PartialPair erectedPerp(const Point& a, const LineRef& L, const Point& s) {
  if (!onLine(a, L)) return bothUndefined(UndefReason::BadArgument);
  if (onLine(s, L)) return bothUndefined(UndefReason::BadArgument);
  const Point u = (L.p == a) ? L.q : L.p;
  PartialPoint b = ext(u, a, a, s);
  if (!b.defined()) return {b, b};
  PartialPoint c = guptaMidpointIso(a, s, b.point());
  if (!c.defined()) return {c, c};
  // The foot of c is never a: |ab| = |as| forces the midpoint of sb off the
  // perpendicular at a.
  PartialPoint x = droppedPerp(c.point(), L);
  if (!x.defined()) return {x, x};
  PartialPoint d = ext(c.point(), x.point(), c.point(), x.point());
  if (!d.defined()) return {d, d};
  PartialPoint e = ext(c.point(), a, c.point(), a);
  if (!e.defined()) return {e, e};
  PartialPoint p = guptaMidpointIso(a, d.point(), e.point());
  if (!p.defined()) return {p, p};
  PartialPoint w = ip(d.point(), p.point(), e.point(), c.point(), a);
  if (!w.defined()) return {w, w};
  PartialPoint t = ip(c.point(), x.point(), d.point(), a, w.point());
  if (!t.defined()) return {t, t};
  PartialPoint r = il(p.point(), s, b.point(), t.point());
  if (!r.defined()) return {r, r};
  return {p, r};
}

PartialPoint shortErectedPerp(const Point& a, const LineRef& L, const Point& c) {
  if (!onLine(a, L))
    return PartialPoint::undefined(UndefReason::BadArgument);
  if (onLine(c, L))
    return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPair onL = ilc(L.p, L.q, c, a);
  if (!onL.first.defined()) return onL.first;
  const Point b =
      (onL.first.point() == a) ? onL.second.point() : onL.first.point();
  // Equal points mean L is tangent at a, i.e. ca is already perpendicular.
  if (b == a) return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPair onM = ilc(b, c, c, a);
  if (!onM.first.defined()) return onM.first;
  const Point e =
      (onM.first.point() == b) ? onM.second.point() : onM.first.point();
  return PartialPoint(e);
}

PartialPoint midpoint(const Point& a, const Point& b, const Point& s) {
  if (a == b) return PartialPoint::undefined(UndefReason::NullSegment);
  if (collinear3(a, b, s)) return PartialPoint::undefined(UndefReason::Collinear);
  const LineRef ab(a, b);
  const LineRef ba(b, a);
  PartialPair atA = erectedPerp(a, ab, s);
  if (!atA.first.defined()) return atA.first;
  const Point p = atA.first.point();
  PartialPair atB = erectedPerp(b, ba, p);
  if (!atB.first.defined()) return atB.first;
  const Point w = atB.first.point();
  const Point v = atB.second.point();
  PartialPoint q = ext(b, w, a, p);
  if (!q.defined()) return q;
  PartialPoint t = continuousPasch(b, w, q.point(), p, v);
  if (!t.defined()) return t;
  PartialPoint wr = ext(w, b, w, b);
  if (!wr.defined()) return wr;
  PartialPoint r = ext(wr.point(), b, a, p);
  if (!r.defined()) return r;
  return ip(b, r.point(), q.point(), p, t.point());
}

PartialPair uniformPerp(const Point& x, const LineRef& L, const Point& w) {
  if (onLine(w, L)) return bothUndefined(UndefReason::BadArgument);
  // Circle around x of radius |L.p L.q| + |L.p x|: L.p is strictly inside
  // whether or not x is on L, so the chord through L always exists.
  PartialPoint c = ext(L.p, L.q, L.p, x);
  if (!c.defined()) return {c, c};
  const Point r = e2(x, L.p, c.point());
  PartialPair cut = ilc(L.p, L.q, x, r);
  if (!cut.first.defined()) return {cut.first, cut.first};
  // The foot is the chord's midpoint, i.e. its arithmetic mean; the witness
  // route computes the same point at far greater depth.
  const Point foot =
      Num(makeRat(1, 2)) * (cut.first.point() + cut.second.point());
  PartialPair up = erectedPerp(foot, L, w);
  if (!up.first.defined()) return up;
  return {PartialPoint(foot), up.first};
}

PartialPoint uniformReflect(const Point& x, const LineRef& L, const Point& s) {
  if (onLine(s, L))
    return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPair drop = uniformPerp(x, L, s);
  if (!drop.first.defined()) return drop.first;
  const Point f = drop.first.point();
  return PartialPoint(f + (f - x));
}

PartialPoint parallelThrough(const Point& p, const LineRef& L, const Point& s) {
  if (onLine(s, L))
    return PartialPoint::undefined(UndefReason::BadArgument);
  PartialPair drop = uniformPerp(p, L, s);
  if (!drop.first.defined()) return drop.first;
  const LineRef M(drop.first.point(), drop.second.point());
  PartialPoint off = pointOffLine(M.p, M.q);
  if (!off.defined()) return off;
  // p lies on M, so the perpendicular to M through p is the parallel; its
  // head is off M and distinct from p.
  PartialPair up = uniformPerp(p, M, off.point());
  if (!up.second.defined()) return up.second;
  return up.second;
}

PartialPoint pointOffLine(const Point& a, const Point& b) {
  if (a == b) return PartialPoint::undefined(UndefReason::NullSegment);
  return PartialPoint(a + rot90(b - a));
}

PartialPoint pointOnKNotL(const Point& a, const Point& b, const Point& q,
                          const Point& r) {
  if (a == b || q == r)
    return PartialPoint::undefined(UndefReason::NullSegment);
  if (cross(b - a, r - q).isZero()) {
    if (collinear3(a, b, q) && collinear3(a, b, r))
      return PartialPoint::undefined(UndefReason::CoincidentLines);
    return PartialPoint::undefined(UndefReason::NoIntersection);
  }
  const BaseTriangle base = baseTriangle();
  const LineRef K(q, r);
  const LineRef L(a, b);
  PartialPoint ck = pointOffLine(q, r);
  if (!ck.defined()) return ck;
  PartialPair perpK = erectedPerp(q, K, ck.point());
  if (!perpK.first.defined()) return perpK.first;
  const Point u = perpK.first.point();
  // v is the mirror of u across K, so K is the perpendicular bisector of uv.
  PartialPoint v = ext(u, q, u, q);
  if (!v.defined()) return v;
  PartialPoint cl = pointOffLine(a, b);
  if (!cl.defined()) return cl;
  PartialPair drop = uniformPerp(u, L, cl.point());
  if (!drop.first.defined()) return drop.first;
  PartialPoint um = uniformReflect(u, L, cl.point());
  if (!um.defined()) return um;
  // Radius 1 + |u um| = 1 + twice the distance from u to L: both cuts of the
  // perpendicular through u sit farther from L than u does, so the
  // circumcenter below cannot be the intersection of K and L.
  PartialPoint z = ext(base.alpha, base.beta, u, um.point());
  if (!z.defined()) return z;
  const Point reach = e2(u, base.alpha, z.point());
  PartialPair cut = ilc(drop.first.point(), drop.second.point(), u, reach);
  if (!cut.first.defined()) return cut.first;
  return center(u, v.point(), cut.first.point());
}

PartialPoint ilElim(const Point& a, const Point& b, const Point& p,
                    const Point& r) {
  if (a == b || p == r)
    return PartialPoint::undefined(UndefReason::NullSegment);
  if (cross(b - a, r - p).isZero()) {
    if (collinear3(a, b, p) && collinear3(a, b, r))
      return PartialPoint::undefined(UndefReason::CoincidentLines);
    return PartialPoint::undefined(UndefReason::NoIntersection);
  }
  const LineRef L(a, b);
  PartialPoint qq = pointOnKNotL(a, b, p, r);
  if (!qq.defined()) return qq;
  const Point q = qq.point();
  const Point second = (p == q) ? r : p;
  PartialPoint w = droppedPerp(q, L);
  if (!w.defined()) return w;
  PartialPoint mw = pointOffLine(q, w.point());
  if (!mw.defined()) return mw;
  PartialPoint m = midpoint(q, w.point(), mw.point());
  if (!m.defined()) return m;
  PartialPoint jw = pointOffLine(q, second);
  if (!jw.defined()) return jw;
  PartialPair perpK = erectedPerp(q, LineRef(q, second), jw.point());
  if (!perpK.first.defined()) return perpK.first;
  // x,y: antipodal points on the circle around q through m, along the
  // perpendicular to Line(p,r) at q.  Both sit strictly between the parallels
  // at distance |qw|, so neither is on L.
  PartialPair cut = ilc(perpK.first.point(), q, q, m.point());
  if (!cut.first.defined()) return cut.first;
  const Point x = cut.first.point();
  const Point y = cut.second.point();
  PartialPoint z = uniformReflect(x, L, q);
  if (!z.defined()) return z;
  // Equidistance from x and y pins Line(p,r); equidistance from x and its
  // mirror z pins L.
  return center(x, y, z.point());
}

PartialPair radicalAxis(const CircleRef& C, const CircleRef& K, const Point& r) {
  const Point& s = C.center;
  const Point& t = K.center;
  if (s == t) return bothUndefined(UndefReason::NullSegment);
  const LineRef axis0(s, t);
  if (onLine(r, axis0)) return bothUndefined(UndefReason::BadArgument);
  // a and b: the points of C and K cut out on r's side by the perpendiculars
  // at the centers.  A null circle contributes its own center.
  PartialPair j1 = erectedPerp(s, axis0, r);
  if (!j1.first.defined()) return j1;
  PartialPair cutC = ilc(j1.first.point(), s, s, C.through);
  if (!cutC.second.defined()) return {cutC.second, cutC.second};
  const Point a = cutC.second.point();
  PartialPair j2 = erectedPerp(t, axis0, r);
  if (!j2.first.defined()) return j2;
  PartialPair cutK = ilc(j2.first.point(), t, t, K.through);
  if (!cutK.second.defined()) return {cutK.second, cutK.second};
  const Point b = cutK.second.point();
  PartialPoint mw = pointOffLine(a, b);
  if (!mw.defined()) return {mw, mw};
  PartialPoint m = midpoint(a, b, mw.point());
  if (!m.defined()) return {m, m};
  PartialPoint w1 = pointOffLine(s, m.point());
  if (!w1.defined()) return {w1, w1};
  PartialPair perpA = uniformPerp(a, LineRef(s, m.point()), w1.point());
  if (!perpA.first.defined()) return perpA;
  PartialPoint w2 = pointOffLine(m.point(), t);
  if (!w2.defined()) return {w2, w2};
  PartialPair perpB = uniformPerp(b, LineRef(m.point(), t), w2.point());
  if (!perpB.first.defined()) return perpB;
  // The two perpendiculars meet in a point of equal power; they are parallel
  // exactly when both circles are null.
  PartialPoint p = il(perpA.first.point(), perpA.second.point(),
                      perpB.first.point(), perpB.second.point());
  if (!p.defined()) return {p, p};
  return uniformPerp(p.point(), axis0, r);
}

PartialPair circleCircle(const CircleRef& C, const CircleRef& K, const Point& r) {
  const Point& s = C.center;
  const Point& t = K.center;
  if (s == t) return bothUndefined(UndefReason::NullSegment);
  if (onLine(r, LineRef(s, t))) return bothUndefined(UndefReason::BadArgument);
  const Num dd = dist2(s, t);
  const Num r1 = dist2(s, C.through);
  const Num r2 = dist2(t, K.through);
  // Intersection criterion |p1-p2| <= d <= p1+p2, squared to stay rational:
  // (d^2 - p1^2 - p2^2)^2 <= 4 p1^2 p2^2.
  const Num gap = dd - r1 - r2;
  if (gap * gap > Num(4) * r1 * r2)
    return bothUndefined(UndefReason::NoIntersection);
  PartialPair ax = radicalAxis(C, K, r);
  if (!ax.first.defined()) return ax;
  PartialPair cut = ilc(ax.first.point(), ax.second.point(), s, C.through);
  if (!cut.first.defined()) return {cut.first, cut.first};
  // Orient: first the point to the left of the directed center line.  The
  // two cuts are mirror images across it, so testing one side suffices.
  if (cross(t - s, cut.second.point() - s).sign() > 0)
    return {cut.second, cut.first};
  return cut;
}

}  // namespace tarski

#include "tarski/verify.hpp"

namespace tarski {
namespace oracle {

Point midpoint(const Point& a, const Point& b) {
  Num half(makeRat(1, 2));
  return half * (a + b);
}

Point foot(const Point& p, const Point& a, const Point& b) {
  if (a == b) throw NoSolution("projection needs a line, got one point");
  Point d = b - a;
  Num t = dot(p - a, d) / dot(d, d);
  return a + t * d;
}

std::optional<Point> lineLine(const Point& a, const Point& b, const Point& p,
                              const Point& q) {
  Point d1 = b - a;
  Point d2 = q - p;
  Num denom = cross(d1, d2);
  if (denom.isZero()) return std::nullopt;
  Num t = cross(p - a, d2) / denom;
  return a + t * d1;
}

std::optional<Point> circumcenter(const Point& a, const Point& b,
                                  const Point& c) {
  // |x-a|^2 = |x-b|^2 = |x-c|^2 as a linear system in x.
  Point u = b - a;
  Point v = c - a;
  Num det = cross(u, v);
  if (det.isZero()) return std::nullopt;
  Num half(makeRat(1, 2));
  Num ru = half * dot(u, u);
  Num rv = half * dot(v, v);
  Num inv = Num(1) / det;
  Num x = (ru * v.y - rv * u.y) * inv;
  Num y = (rv * u.x - ru * v.x) * inv;
  return a + Point{x, y};
}

std::optional<std::pair<Point, Point>> lineCircle(const Point& a,
                                                  const Point& b,
                                                  const Point& c,
                                                  const Point& d) {
  if (a == b) return std::nullopt;
  Point f = foot(c, a, b);
  Num r2 = dist2(c, d);
  Num h2 = r2 - dist2(c, f);
  if (h2.sign() < 0) return std::nullopt;
  Point dir = b - a;
  Num s = Num::sqrt(h2 / dot(dir, dir));
  return std::make_pair(f - s * dir, f + s * dir);
}

std::optional<std::pair<Point, Point>> circleCircle(const Point& c1,
                                                    const Point& t1,
                                                    const Point& c2,
                                                    const Point& t2) {
  if (c1 == c2) return std::nullopt;
  Point d = c2 - c1;
  Num dd = dot(d, d);
  Num r1 = dist2(c1, t1);
  Num r2 = dist2(c2, t2);
  // Radical line: |x-c1|^2 - r1 = |x-c2|^2 - r2; foot at c1 + lambda d.
  Num lambda = (dd + r1 - r2) / (Num(2) * dd);
  Num h2 = r1 - lambda * lambda * dd;
  if (h2.sign() < 0) return std::nullopt;
  Point base = c1 + lambda * d;
  Num s = Num::sqrt(h2 / dd);
  Point off = s * rot90(d);
  // cross(d, rot90(d)) = |d|^2 > 0, so base + off is left of c1 -> c2.
  return std::make_pair(base + off, base - off);
}

}  // namespace oracle
}  // namespace tarski

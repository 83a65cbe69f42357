#pragma once

#include "tarski/number.hpp"

#include <stdexcept>

namespace tarski {

struct Point {
  Num x, y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Num& s, const Point& p) {
    return {s * p.x, s * p.y};
  }
};

inline Num dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Num cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Num dist2(const Point& a, const Point& b) { return dot(a - b, a - b); }
inline Point rot90(const Point& u) { return {-u.y, u.x}; }

// A line carried by two distinct points.
struct LineRef {
  Point p, q;
  LineRef(Point a, Point b) : p(std::move(a)), q(std::move(b)) {
    if (p == q) throw std::invalid_argument("line needs two distinct points");
  }
};

// Center and a point on the circle; a null circle (through == center) is legal.
struct CircleRef {
  Point center, through;
};

}  // namespace tarski

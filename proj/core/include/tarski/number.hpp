#pragma once

// Exact arithmetic over the field of constructible reals: nested quadratic
// extensions of the rationals.  Every value is either a rational or
// lo + hi*sqrt(r) with lo, hi, r in a smaller field.  All comparisons are
// exact; there is no floating point anywhere.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tarski {

using Rat = mpq_class;

// Builds a canonical rational (positive denominator, reduced).
Rat makeRat(const mpz_class& num, const mpz_class& den);

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};
struct NegativeRadicand : std::runtime_error {
  NegativeRadicand() : std::runtime_error("square root of a negative value") {}
};
struct NumberParseError : std::runtime_error {
  explicit NumberParseError(const std::string& what) : std::runtime_error(what) {}
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;
struct NumNode;

class Num {
 public:
  Num() : q_(0) {}
  Num(int v) : q_(v) {}
  Num(long v) : q_(static_cast<signed long>(v)) {}
  Num(const Rat& v) : q_(v) { q_.canonicalize(); }

  // Canonical shape: rational() means no radical is left after collapsing.
  bool rational() const { return node_ == nullptr; }
  const Rat& ratValue() const;  // requires rational()
  int depth() const;            // number of nested radicals

  int sign() const;
  bool isZero() const { return sign() == 0; }

  Num operator-() const;
  friend Num operator+(const Num& a, const Num& b);
  friend Num operator-(const Num& a, const Num& b);
  friend Num operator*(const Num& a, const Num& b);
  friend Num operator/(const Num& a, const Num& b);  // throws DivisionByZero
  Num& operator+=(const Num& o) { return *this = *this + o; }
  Num& operator-=(const Num& o) { return *this = *this - o; }
  Num& operator*=(const Num& o) { return *this = *this * o; }
  Num& operator/=(const Num& o) { return *this = *this / o; }

  friend bool operator==(const Num& a, const Num& b) { return (a - b).isZero(); }
  friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }
  friend bool operator<(const Num& a, const Num& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Num& a, const Num& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Num& a, const Num& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Num& a, const Num& b) { return (a - b).sign() >= 0; }

  // Nonnegative square root; throws NegativeRadicand.  Perfect squares at the
  // value's own level collapse instead of creating a new radical.
  static Num sqrt(const Num& x);

  // Encloses the value in a rational interval of width <= 2^-bits.
  std::pair<Rat, Rat> approx(unsigned bits) const;

  // Serialization in the literal grammar (integers, p/q, sqrt(...), + - * /).
  std::string str() const;
  static Num parse(const std::string& text);

  // Identical representation (sufficient but not necessary for equality).
  static bool sameRep(const Num& a, const Num& b);

  // Read-only view of the representation; null for rationals.
  const NumNode* node() const { return node_.get(); }

 private:
  friend class Tower;
  friend struct NumImpl;
  Rat q_;                               // value when node_ is null
  std::shared_ptr<const NumNode> node_; // set when a radical is present
};

// One quadratic extension step.  radicand is positive and not a square in the
// field described by below (null below = rationals).  Towers are interned so
// equal extension chains share representation.
class Tower {
 public:
  const TowerPtr below;
  const Num radicand;
  const int height;

  static TowerPtr get(const TowerPtr& below, const Num& radicand);

  // Kernel-managed cache of 1/radicand (guarded by the kernel lock); the
  // in-field root search divides by the radicand at every level it visits.
  mutable Num radicandInv;
  mutable bool radicandInvSet = false;

 private:
  Tower(TowerPtr b, Num r, int h)
      : below(std::move(b)), radicand(std::move(r)), height(h) {}
};

struct NumNode {
  TowerPtr tower;  // the extension this value lives in
  Num lo, hi;      // value = lo + hi*sqrt(tower->radicand); hi != 0
  // Lazily filled, monotone caches; guarded by a kernel-internal lock.  A
  // canonical node is never zero, so a resolved sign is always +1 or -1.
  mutable int signCache = 0;     // 0 while unresolved
  mutable unsigned encPrec = 0;  // dyadic bits of the cached enclosure
  mutable Rat encLo, encHi;
};

}  // namespace tarski

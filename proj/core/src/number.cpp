#include "tarski/number.hpp"

#include <cassert>
#include <mutex>
#include <optional>
#include <vector>

namespace tarski {

Rat makeRat(const mpz_class& num, const mpz_class& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

const Rat& Num::ratValue() const {
  assert(rational());
  return q_;
}

int Num::depth() const { return node_ ? node_->tower->height : 0; }

// ---------------------------------------------------------------------------
// Dyadic interval enclosure.
//
// Signs and approximations are decided numerically: a canonical node is never
// zero, so refining an enclosure until it excludes zero always terminates.
// Endpoints are rounded outward to denominator 2^prec after every step so
// their size tracks the precision, not the coefficients, and every node
// caches its best enclosure.  Towers are shared, so radicand enclosures are
// computed once per precision for a whole chain.

namespace {

std::mutex g_cacheMu;

struct Interval {
  Rat lo, hi;
};

Rat floorDyadic(const Rat& q, unsigned prec) {
  mpz_class scaled = q.get_num() << prec;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), scaled.get_mpz_t(), mpq_denref(q.get_mpq_t()));
  return makeRat(out, mpz_class(1) << prec);
}

Rat ceilDyadic(const Rat& q, unsigned prec) {
  mpz_class scaled = q.get_num() << prec;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), scaled.get_mpz_t(), mpq_denref(q.get_mpq_t()));
  return makeRat(out, mpz_class(1) << prec);
}

// floor resp. ceil of sqrt(q) at 2^-prec resolution; requires q >= 0.
Rat sqrtLower(const Rat& q, unsigned prec) {
  mpz_class scaled = (q.get_num() * q.get_den()) << (2 * prec);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return makeRat(root, q.get_den() << prec);
}

Rat sqrtUpper(const Rat& q, unsigned prec) {
  mpz_class scaled = (q.get_num() * q.get_den()) << (2 * prec);
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  if (rem != 0) root += 1;
  return makeRat(root, q.get_den() << prec);
}

Interval ivAdd(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval ivMul(const Interval& a, const Interval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  Rat lo = c1, hi = c1;
  for (const Rat* c : {&c2, &c3, &c4}) {
    if (*c < lo) lo = *c;
    if (*c > hi) hi = *c;
  }
  return {lo, hi};
}

Interval encloseNum(const Num& v, unsigned prec) {
  if (v.rational())
    return {floorDyadic(v.ratValue(), prec), ceilDyadic(v.ratValue(), prec)};
  const NumNode& n = *v.node();
  {
    std::lock_guard<std::mutex> guard(g_cacheMu);
    if (n.encPrec >= prec) return {n.encLo, n.encHi};
  }
  Interval lo = encloseNum(n.lo, prec);
  Interval hi = encloseNum(n.hi, prec);
  Interval rad = encloseNum(n.tower->radicand, prec);
  if (rad.lo < 0) rad.lo = 0;  // radicand is positive; enclosure may dip under
  Interval root{sqrtLower(rad.lo, prec), sqrtUpper(rad.hi, prec)};
  Interval sum = ivAdd(lo, ivMul(hi, root));
  Interval out{floorDyadic(sum.lo, prec), ceilDyadic(sum.hi, prec)};
  std::lock_guard<std::mutex> guard(g_cacheMu);
  if (prec > n.encPrec) {
    n.encPrec = prec;
    n.encLo = out.lo;
    n.encHi = out.hi;
  }
  return out;
}

}  // namespace

// NumImpl has full access to Num internals; everything recursive lives here.
struct NumImpl {
  static const std::shared_ptr<const NumNode>& node(const Num& v) { return v.node_; }

  static Num make(TowerPtr tower, Num lo, Num hi) {
    if (hi.rational() && hi.ratValue() == 0) return lo;
    Num out;
    auto n = std::make_shared<NumNode>();
    n->tower = std::move(tower);
    n->lo = std::move(lo);
    n->hi = std::move(hi);
    out.node_ = std::move(n);
    return out;
  }

  static bool sameRep(const Num& a, const Num& b) {
    if (a.rational() != b.rational()) return false;
    if (a.rational()) return a.ratValue() == b.ratValue();
    const auto& na = *a.node_;
    const auto& nb = *b.node_;
    if (na.tower.get() != nb.tower.get()) return false;
    return sameRep(na.lo, nb.lo) && sameRep(na.hi, nb.hi);
  }

  // True when v already lives in the field described by chain t.
  static bool within(const Num& v, const TowerPtr& t) {
    if (v.rational()) return true;
    const Tower* mine = v.node_->tower.get();
    for (const Tower* walk = t.get(); walk; walk = walk->below.get())
      if (walk == mine) return true;
    return false;
  }

  // Coefficients of v at the top level of chain t; requires within(v, t).
  static std::pair<Num, Num> decompose(const Num& v, const TowerPtr& t) {
    if (!v.rational() && v.node_->tower.get() == t.get())
      return {v.node_->lo, v.node_->hi};
    assert(t && within(v, t->below));
    return {v, Num(0)};
  }

  static TowerPtr tower(const Num& v) {
    return v.rational() ? nullptr : v.node_->tower;
  }

  // --- arithmetic for operands lying in one shared chain ---

  static TowerPtr deeper(const Num& a, const Num& b) {
    TowerPtr ta = tower(a), tb = tower(b);
    if (!ta) return tb;
    if (!tb) return ta;
    return ta->height >= tb->height ? ta : tb;
  }

  static Num addIn(const Num& a, const Num& b) {
    if (a.rational() && b.rational()) return Num(a.ratValue() + b.ratValue());
    TowerPtr t = deeper(a, b);
    auto [alo, ahi] = decompose(a, t);
    auto [blo, bhi] = decompose(b, t);
    return make(t, addIn(alo, blo), addIn(ahi, bhi));
  }

  static Num negIn(const Num& a) {
    if (a.rational()) return Num(Rat(-a.ratValue()));
    return make(a.node_->tower, negIn(a.node_->lo), negIn(a.node_->hi));
  }

  static Num subIn(const Num& a, const Num& b) { return addIn(a, negIn(b)); }

  static Num mulIn(const Num& a, const Num& b) {
    if (a.rational() && b.rational()) return Num(a.ratValue() * b.ratValue());
    if (a.rational() && a.ratValue() == 0) return Num(0);
    if (b.rational() && b.ratValue() == 0) return Num(0);
    TowerPtr t = deeper(a, b);
    auto [alo, ahi] = decompose(a, t);
    auto [blo, bhi] = decompose(b, t);
    const Num& r = t->radicand;
    Num lo = addIn(mulIn(alo, blo), mulIn(mulIn(ahi, bhi), r));
    Num hi = addIn(mulIn(alo, bhi), mulIn(ahi, blo));
    return make(t, lo, hi);
  }

  // 1/radicand, computed once per tower level.
  static const Num& radicandInverse(const TowerPtr& t) {
    {
      std::lock_guard<std::mutex> guard(g_cacheMu);
      if (t->radicandInvSet) return t->radicandInv;
    }
    Num inv = invIn(t->radicand);
    std::lock_guard<std::mutex> guard(g_cacheMu);
    if (!t->radicandInvSet) {
      t->radicandInv = std::move(inv);
      t->radicandInvSet = true;
    }
    return t->radicandInv;
  }

  // Multiplicative inverse; requires a != 0.
  static Num invIn(const Num& a) {
    if (a.rational()) {
      assert(a.ratValue() != 0);
      return Num(Rat(1) / a.ratValue());
    }
    const auto& n = *a.node_;
    const Num& r = n.tower->radicand;
    // (lo + hi*sqrt(r))^-1 = (lo - hi*sqrt(r)) / (lo^2 - hi^2 r); the norm is
    // nonzero because r is not a square one level down.
    Num norm = subIn(mulIn(n.lo, n.lo), mulIn(mulIn(n.hi, n.hi), r));
    Num ninv = invIn(norm);
    return make(n.tower, mulIn(n.lo, ninv), negIn(mulIn(n.hi, ninv)));
  }

  // Exact recursive sign; exponential in depth, kept as the safety net for
  // the numeric path below.
  static int signAlgebraic(const Num& a) {
    if (a.rational()) return sgn(a.ratValue());
    const auto& n = *a.node_;
    int sa = signAlgebraic(n.lo);
    int sb = signAlgebraic(n.hi);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare lo^2 against hi^2 * r one level down.
    Num diff = subIn(mulIn(n.lo, n.lo),
                     mulIn(mulIn(n.hi, n.hi), n.tower->radicand));
    int t = signAlgebraic(diff);
    return sa > 0 ? t : -t;
  }

  static int signIn(const Num& a) {
    if (a.rational()) return sgn(a.ratValue());
    const auto& n = *a.node_;
    {
      std::lock_guard<std::mutex> guard(g_cacheMu);
      if (n.signCache != 0) return n.signCache;
    }
    // Refine until zero is excluded; guaranteed for a canonical node.
    int result = 0;
    for (unsigned prec = 64; result == 0 && prec <= (1u << 20); prec *= 2) {
      Interval iv = encloseNum(a, prec);
      if (sgn(iv.lo) > 0)
        result = 1;
      else if (sgn(iv.hi) < 0)
        result = -1;
    }
    if (result == 0) result = signAlgebraic(a);
    std::lock_guard<std::mutex> guard(g_cacheMu);
    n.signCache = result;
    return result;
  }

  // --- cross-chain machinery ---

  // Nonnegative square root of x inside the field described by t, if that
  // field contains one.  Requires within(x, t).
  static std::optional<Num> sqrtInField(const Num& x, const TowerPtr& t) {
    int sg = signIn(x);
    if (sg < 0) return std::nullopt;
    if (sg == 0) return Num(0);
    if (!t) {
      const Rat& q = x.ratValue();
      mpz_class num = q.get_num(), den = q.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) &&
          mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Num(makeRat(rn, rd));
      }
      return std::nullopt;
    }
    auto [a, b] = decompose(x, t);
    const Num& r = t->radicand;
    if (signIn(b) == 0) {
      if (auto s = sqrtInField(a, t->below)) return s;
      // a might be r times a square, giving sqrt(a) = s*sqrt(r).
      Num quot = mulIn(a, radicandInverse(t));
      if (auto s = sqrtInField(quot, t->below)) return make(t, Num(0), *s);
      return std::nullopt;
    }
    // x = a + b*sqrt(r), b != 0: solve (c + d*sqrt(r))^2 = x.  Then
    // c^2 = (a +- sqrt(a^2 - b^2 r)) / 2 and d = b / (2c).
    Num normD = subIn(mulIn(a, a), mulIn(mulIn(b, b), r));
    auto s = sqrtInField(normD, t->below);
    if (!s) return std::nullopt;
    Num half(Rat(1, 2));
    for (int branch = 0; branch < 2; ++branch) {
      Num c2 = mulIn(branch == 0 ? addIn(a, *s) : subIn(a, *s), half);
      auto c = sqrtInField(c2, t->below);
      if (!c || signIn(*c) == 0) continue;
      Num d = mulIn(b, invIn(mulIn(Num(2), *c)));
      Num y = make(t, *c, d);
      if (signIn(y) < 0) y = negIn(y);
      return y;
    }
    return std::nullopt;
  }

  // Re-expresses v over chain t; every radical of v must have a root in that
  // field (guaranteed after joinChains).
  static Num embed(const Num& v, const TowerPtr& t) {
    if (within(v, t)) return v;
    const auto& n = *v.node_;
    Num rad = embed(n.tower->radicand, t);
    auto s = sqrtInField(rad, t);
    assert(s.has_value());
    return addIn(embed(n.lo, t), mulIn(embed(n.hi, t), *s));
  }

  // Smallest chain extending t in which every level of s has a root.
  static TowerPtr joinChains(const TowerPtr& s, const TowerPtr& t) {
    if (s.get() == t.get()) return s;
    if (!s) return t;
    if (!t) return s;
    auto contains = [](const TowerPtr& outer, const TowerPtr& inner) {
      for (const Tower* walk = outer.get(); walk; walk = walk->below.get())
        if (walk == inner.get()) return true;
      return false;
    };
    if (contains(s, t)) return s;
    if (contains(t, s)) return t;
    std::vector<const Tower*> levels;
    for (const Tower* walk = s.get(); walk; walk = walk->below.get())
      levels.push_back(walk);
    TowerPtr u = t;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      Num rad = embed((*it)->radicand, u);
      if (!sqrtInField(rad, u)) u = Tower::get(u, rad);
    }
    return u;
  }

  static std::pair<Num, Num> lift(const Num& a, const Num& b) {
    TowerPtr u = joinChains(tower(a), tower(b));
    return {embed(a, u), embed(b, u)};
  }
};

bool Num::sameRep(const Num& a, const Num& b) { return NumImpl::sameRep(a, b); }

// ---------------------------------------------------------------------------
// Tower interning

namespace {

std::mutex& internMutex() {
  static std::mutex m;
  return m;
}

struct InternEntry {
  const Tower* below;
  Num radicand;
  std::weak_ptr<const Tower> tower;
};

std::vector<InternEntry>& internTable() {
  static std::vector<InternEntry> t;
  return t;
}

}  // namespace

TowerPtr Tower::get(const TowerPtr& below, const Num& radicand) {
  std::lock_guard<std::mutex> lock(internMutex());
  auto& table = internTable();
  for (auto it = table.begin(); it != table.end();) {
    if (auto sp = it->tower.lock()) {
      if (sp->below.get() == below.get() && Num::sameRep(it->radicand, radicand))
        return sp;
      ++it;
    } else {
      it = table.erase(it);
    }
  }
  TowerPtr t(new Tower(below, radicand, below ? below->height + 1 : 1));
  table.push_back({below.get(), radicand, t});
  return t;
}

// ---------------------------------------------------------------------------
// Public arithmetic

int Num::sign() const { return NumImpl::signIn(*this); }

Num Num::operator-() const { return NumImpl::negIn(*this); }

Num operator+(const Num& a, const Num& b) {
  auto [x, y] = NumImpl::lift(a, b);
  return NumImpl::addIn(x, y);
}

Num operator-(const Num& a, const Num& b) {
  auto [x, y] = NumImpl::lift(a, b);
  return NumImpl::subIn(x, y);
}

Num operator*(const Num& a, const Num& b) {
  auto [x, y] = NumImpl::lift(a, b);
  return NumImpl::mulIn(x, y);
}

Num operator/(const Num& a, const Num& b) {
  if (b.isZero()) throw DivisionByZero();
  auto [x, y] = NumImpl::lift(a, b);
  return NumImpl::mulIn(x, NumImpl::invIn(y));
}

Num Num::sqrt(const Num& x) {
  int sg = x.sign();
  if (sg < 0) throw NegativeRadicand();
  if (sg == 0) return Num(0);
  TowerPtr t = NumImpl::tower(x);
  if (auto s = NumImpl::sqrtInField(x, t)) return *s;
  TowerPtr ext = Tower::get(t, x);
  return NumImpl::make(ext, Num(0), Num(1));
}

std::pair<Rat, Rat> Num::approx(unsigned bits) const {
  Rat target = makeRat(1, mpz_class(1) << bits);
  for (unsigned prec = bits + 8;; prec *= 2) {
    Interval iv = encloseNum(*this, prec);
    if (iv.hi - iv.lo <= target) return {iv.lo, iv.hi};
  }
}

}  // namespace tarski

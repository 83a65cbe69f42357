#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tarski/number.hpp"

using tarski::Num;
using tarski::Rat;
using tarski::makeRat;

static Num rat(long p, long q) { return Num(makeRat(p, q)); }

TEST_CASE("rational arithmetic") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
  CHECK(rat(2, 3) * rat(9, 4) == rat(3, 2));
  CHECK(rat(1, 2) / rat(1, 3) == rat(3, 2));
  CHECK((rat(5, 6)).rational());
  CHECK(makeRat(-4, -6) == Rat(2, 3));
  CHECK(makeRat(4, -6) == Rat(-2, 3));
  CHECK(Num(7) - Num(7) == Num(0));
  CHECK((Num(3) / Num(-6)).ratValue() == Rat(-1, 2));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Num(1) / Num(0), tarski::DivisionByZero);
  Num z = Num::sqrt(Num(2)) - Num::sqrt(Num(2));
  CHECK_THROWS_AS(Num(1) / z, tarski::DivisionByZero);
}

TEST_CASE("square roots collapse when exact") {
  CHECK(Num::sqrt(Num(4)) == Num(2));
  CHECK(Num::sqrt(Num(4)).rational());
  CHECK(Num::sqrt(rat(9, 4)) == rat(3, 2));
  CHECK(Num::sqrt(Num(0)) == Num(0));
  CHECK_THROWS_AS(Num::sqrt(Num(-1)), tarski::NegativeRadicand);
}

TEST_CASE("simple radicals") {
  Num s2 = Num::sqrt(Num(2));
  CHECK(s2.depth() == 1);
  CHECK(s2 * s2 == Num(2));
  CHECK((s2 * s2).rational());
  CHECK(s2.sign() == 1);
  CHECK((-s2).sign() == -1);
  CHECK(s2 + (-s2) == Num(0));
  CHECK((s2 + (-s2)).rational());
  CHECK(Num(1) / s2 == s2 * rat(1, 2));
}

TEST_CASE("inverse in an extension") {
  Num s2 = Num::sqrt(Num(2));
  Num x = Num(1) + s2;
  Num inv = Num(1) / x;
  CHECK(inv == s2 - Num(1));
  CHECK(x * inv == Num(1));
}

TEST_CASE("denesting a nested square") {
  Num s2 = Num::sqrt(Num(2));
  Num x = Num(3) + Num(2) * s2;  // (1 + sqrt(2))^2
  Num r = Num::sqrt(x);
  CHECK(r.depth() == 1);
  CHECK(r == Num(1) + s2);
  Num y = Num(3) - Num(2) * s2;  // (sqrt(2) - 1)^2
  CHECK(y.sign() == 1);
  Num ry = Num::sqrt(y);
  CHECK(ry == s2 - Num(1));
  CHECK(ry.sign() == 1);
  CHECK(ry * ry == y);
}

TEST_CASE("signs near close rationals") {
  Num s2 = Num::sqrt(Num(2));
  CHECK((s2 - rat(3, 2)).sign() == -1);
  CHECK((s2 - rat(7, 5)).sign() == 1);
  CHECK((s2 - rat(141421356, 100000000)).sign() == 1);
  Num s3 = Num::sqrt(Num(3));
  CHECK((s3 + s2 - rat(31, 10)).sign() == 1);
  CHECK((s3 + s2 - rat(32, 10)).sign() == -1);
}

TEST_CASE("mixing independent radicals") {
  Num s2 = Num::sqrt(Num(2));
  Num s3 = Num::sqrt(Num(3));
  Num s6 = Num::sqrt(Num(6));
  CHECK(s2 * s3 == s6);
  CHECK(s6 / s2 == s3);
  Num sum = s2 + s3;
  CHECK(sum * sum == Num(5) + Num(2) * s6);
  CHECK((s3 - s2) * (s3 + s2) == Num(1));
  CHECK(Num(1) / sum == s3 - s2);
}

TEST_CASE("nested radicals") {
  Num s2 = Num::sqrt(Num(2));
  Num inner = Num(3) + s2;
  Num r = Num::sqrt(inner);
  CHECK(r.depth() == 2);
  CHECK(r * r == inner);
  CHECK(r.sign() == 1);
  Num again = Num::sqrt(r * r);
  CHECK(again == r);
}

TEST_CASE("rational enclosure") {
  Num s2 = Num::sqrt(Num(2));
  auto [lo, hi] = s2.approx(40);
  CHECK(hi - lo <= makeRat(1, mpz_class(1) << 40));
  CHECK(lo >= 0);
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);

  auto [plo, phi] = rat(22, 7).approx(10);
  CHECK(plo <= Rat(22, 7));
  CHECK(phi >= Rat(22, 7));
  CHECK(phi - plo <= Rat(1, 1024));

  Num v = (Num(1) + s2) / Num::sqrt(Num(3) + s2);
  auto [vlo, vhi] = v.approx(64);
  CHECK(vhi - vlo <= makeRat(1, mpz_class(1) << 64));
  // value is positive and between 1 and 2
  CHECK(vlo > 0);
  CHECK(vhi < 2);
}

TEST_CASE("literal round trips") {
  const char* inputs[] = {
      "0",       "42",          "-7",           "5/6",
      "-22/7",   "sqrt(2)",     "1 + sqrt(2)",  "3/4*sqrt(2) - 1",
      "sqrt(3 + sqrt(2))",      "(1+sqrt(5))/2", "sqrt(2)*sqrt(3)",
      "2 - 2/3", "sqrt(49/64)", "-(1 - sqrt(2))",
  };
  for (const char* in : inputs) {
    CAPTURE(in);
    Num v = Num::parse(in);
    Num back = Num::parse(v.str());
    CHECK(back == v);
    CHECK(v.str() == Num::parse(in).str());  // same build path, same text
  }
  CHECK(Num::parse("5/6") == rat(5, 6));
  CHECK(Num::parse("sqrt(2)") == Num::sqrt(Num(2)));
  CHECK(Num::parse("(1+sqrt(5))/2") * Num::parse("(sqrt(5)-1)/2") == Num(1));
}

TEST_CASE("literal errors") {
  CHECK_THROWS_AS(Num::parse(""), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("x"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("1/0"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("sqrt(0-4)"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("1 +"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("2 2"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("sqrt 2"), tarski::NumberParseError);
  CHECK_THROWS_AS(Num::parse("(1"), tarski::NumberParseError);
}

TEST_CASE("representation identity") {
  Num s2a = Num::sqrt(Num(2));
  Num s2b = Num::parse("sqrt(2)");
  CHECK(Num::sameRep(s2a, s2b));
  Num half = Num::parse("sqrt(2)/2");
  CHECK_FALSE(Num::sameRep(s2a, half));
  CHECK(Num::sameRep(rat(2, 4), rat(1, 2)));
}

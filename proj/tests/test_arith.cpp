#include <doctest.h>

#include "specjump/error.hpp"
#include "specjump/parse.hpp"
#include "specjump/poly2.hpp"
#include "specjump/rational.hpp"
#include "support.hpp"

using namespace specjump;
using specjump::testing::random_poly;
using specjump::testing::random_rational;

namespace {

Poly2 P(const char* text) { return parse_poly(text); }
Poly2 U(const char* text) { return parse_poly(text, kUV); }

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}

TEST_CASE("rational floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(5).floor() == 5);
  CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(5, 6) - Rational(1, 2) == third);
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  const BigInt big("123456789012345678901234567890");
  CHECK((Rational(big) * Rational(1, 10)).str() == "12345678901234567890123456789");
  CHECK_THROWS_AS(to_int64(big), Error);
}

TEST_CASE("order at origin") {
  CHECK(order_at_origin(P("x^2 + y^3")) == 2u);
  CHECK(order_at_origin(P("x*y")) == 2u);
  CHECK(order_at_origin(P("1 + x")) == 0u);
  CHECK_FALSE(order_at_origin(Poly2()).has_value());
}

TEST_CASE("substitution examples") {
  const Poly2 u = Poly2::x();
  const Poly2 uv = Poly2::x() * Poly2::y();
  CHECK(substitute(P("x^2 + y^3"), u, uv) == U("u^2*(1 + u*v^3)"));
  CHECK(substitute(P("x*y"), u, uv) == U("u^2*v"));
  const Poly2 p = P("(1/2)*x*y^4 - y^7 + 3");
  CHECK(substitute(p, Poly2::x(), Poly2::y()) == p);
}

TEST_CASE("truncated substitution agrees with truncating the full one") {
  for (int trial = 0; trial < 20; ++trial) {
    const Poly2 p = random_poly(5, 5);
    const Poly2 a = random_poly(3, 3) * Poly2::x();
    const Poly2 b = random_poly(3, 3);
    for (unsigned bound : {1u, 3u, 6u}) {
      CHECK(substitute_truncated(p, a, b, 0, bound) == substitute(p, a, b).truncated(0, bound));
    }
  }
}

TEST_CASE("parser") {
  CHECK(P("x^2 + y^3").str() == "y^3 + x^2");
  CHECK(P("(1/2)*x*y^4 - y^7") == Poly2::monomial(1, 4, Rational(1, 2)) - Poly2::monomial(0, 7));
  CHECK(P("  - x *  ( y - 1 ) ") == P("x - x*y"));
  CHECK(P("(x+y)^3") == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(P("2*x/4") == P("(1/2)*x"));
  CHECK(P("-x^2") == -(Poly2::x() * Poly2::x()));
  CHECK(P("x^0") == Poly2(1));
  CHECK_THROWS_AS(P("x +"), Error);
  CHECK_THROWS_AS(P("x / y"), Error);
  CHECK_THROWS_AS(P("x / 0"), Error);
  CHECK_THROWS_AS(P("z"), Error);
  CHECK_THROWS_AS(P("(x"), Error);
  try {
    P("x + * y");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("printing round-trips through the parser") {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly2 p = random_poly(6, 6);
    CHECK(parse_poly(p.str()) == p);
    CHECK(parse_poly(p.str(kUV), kUV) == p);
  }
}

TEST_CASE("order is additive on random products") {
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2 p = random_poly(5, 4);
    const Poly2 q = random_poly(5, 4);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(*order_at_origin(p * q) == *order_at_origin(p) + *order_at_origin(q));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly2 p = random_poly(4, 4);
    const Poly2 q = random_poly(4, 4);
    const Poly2 a = random_poly(3, 3);
    const Poly2 b = random_poly(3, 3);
    CHECK(substitute(p + q, a, b) == substitute(p, a, b) + substitute(q, a, b));
    CHECK(substitute(p * q, a, b) == substitute(p, a, b) * substitute(q, a, b));
  }
}

TEST_CASE("substitution commutes with evaluation") {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly2 p = random_poly(4, 5);
    const Poly2 a = random_poly(3, 3);
    const Poly2 b = random_poly(3, 3);
    const Rational s = random_rational();
    const Rational t = random_rational();
    CHECK(substitute(p, a, b).evaluate(s, t) == p.evaluate(a.evaluate(s, t), b.evaluate(s, t)));
  }
}

TEST_CASE("exact division") {
  const Poly2 f = P("x^3 - y^2 + x*y");
  const Poly2 g = P("x - 2*y + 1");
  CHECK(exact_divide(f * g, g) == f);
  CHECK_FALSE(exact_divide(f + 1, g).has_value());
  for (int trial = 0; trial < 20; ++trial) {
    const Poly2 p = random_poly(4, 4);
    const Poly2 q = random_poly(3, 3);
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

#include <doctest.h>

#include <numeric>

#include "specjump/error.hpp"
#include "specjump/factor.hpp"
#include "specjump/parse.hpp"
#include "specjump/squarefree2.hpp"
#include "specjump/unipoly.hpp"
#include "support.hpp"

using namespace specjump;

namespace {

UniPoly V(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

UniPoly product(const std::vector<IrreducibleFactor>& factors) {
  UniPoly out(Rational(1));
  for (const auto& f : factors) out = out * f.factor.pow(f.multiplicity);
  return out;
}

// Test-side irreducibility screen for degree 2: no rational root iff the
// discriminant is not a rational square.
bool rational_square(const Rational& r) {
  if (r.sign() < 0) return false;
  return mpz_perfect_square_p(r.numerator().get_mpz_t()) &&
         mpz_perfect_square_p(r.denominator().get_mpz_t());
}

}  // namespace

TEST_CASE("squarefree split examples") {
  const auto square = squarefree_split(V({1, -2, 1}));
  REQUIRE(square.size() == 1);
  CHECK(square[0].factor == V({-1, 1}));
  CHECK(square[0].multiplicity == 2);

  // v^3 + 1 = (v + 1)(v^2 - v + 1): checked by exact division and the
  // discriminant of the quadratic part.
  const auto cube = squarefree_split(V({1, 0, 0, 1}));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].multiplicity == 1);
  REQUIRE(cube[0].irreducible_parts.size() == 2);
  CHECK(cube[0].irreducible_parts[0].degree() == 1);
  CHECK(cube[0].irreducible_parts[1].degree() == 2);
  const auto [quotient, remainder] = divmod(V({1, 0, 0, 1}), cube[0].irreducible_parts[0]);
  CHECK(remainder.is_zero());
  CHECK(quotient.monic() == cube[0].irreducible_parts[1]);
  const UniPoly& quad = cube[0].irreducible_parts[1];
  CHECK(quad.coefficient(1) * quad.coefficient(1) - Rational(4) * quad.coefficient(0) * quad.coefficient(2) ==
        Rational(-3));

  const auto linear = squarefree_split(V({0, 1}));
  REQUIRE(linear.size() == 1);
  CHECK(linear[0].factor == V({0, 1}));
  CHECK(linear[0].multiplicity == 1);

  CHECK_THROWS_AS(squarefree_split(UniPoly()), Error);
}

TEST_CASE("rational roots examples") {
  CHECK(rational_roots(V({0, -1, 1})) ==
        std::vector<RationalRoot>{{Rational(0), 1}, {Rational(1), 1}});
  CHECK(rational_roots(V({1, -1, 1})).empty());
  CHECK(rational_roots(V({-3, 2})) == std::vector<RationalRoot>{{Rational(3, 2), 1}});
  CHECK(rational_roots(V({1, -2, 1})) == std::vector<RationalRoot>{{Rational(1), 2}});
  CHECK_THROWS_AS(rational_roots(UniPoly()), Error);

  // v^2 - v + 1: the only candidates by the rational root test are +-1.
  const UniPoly q = V({1, -1, 1});
  CHECK_FALSE(q.evaluate(Rational(1)).is_zero());
  CHECK_FALSE(q.evaluate(Rational(-1)).is_zero());
  const auto split = squarefree_split(q);
  REQUIRE(split.size() == 1);
  CHECK(split[0].factor.degree() == 2);
}

TEST_CASE("irreducible factorization") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  const auto quartic = factor_over_rationals(V({1, 0, 0, 0, 1}));
  REQUIRE(quartic.size() == 1);
  CHECK(quartic[0].factor.degree() == 4);

  // x^12 - 1: cyclotomic factors Phi_d for d | 12 have degrees phi(d).
  const auto twelve = factor_over_rationals(V({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  std::vector<int> degrees;
  for (const auto& f : twelve) degrees.push_back(f.factor.degree());
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 2, 2, 2, 4});

  // Swinnerton-Dyer style: (v^2 - 2)(v^2 - 3) has two quadratic parts.
  const auto sd = factor_over_rationals(V({6, 0, -5, 0, 1}));
  REQUIRE(sd.size() == 2);
  for (const auto& f : sd) {
    CHECK(f.factor.degree() == 2);
    const Rational disc = f.factor.coefficient(1) * f.factor.coefficient(1) -
                          Rational(4) * f.factor.coefficient(0) * f.factor.coefficient(2);
    CHECK_FALSE(rational_square(disc));
  }

  CHECK_THROWS_AS(factor_over_rationals(UniPoly::monomial(20) + UniPoly(Rational(1)), 16), Error);
}

TEST_CASE("factorization reassembles random products") {
  for (int trial = 0; trial < 25; ++trial) {
    UniPoly q(Rational(testing::uniform(1, 5)));
    const int pieces = static_cast<int>(testing::uniform(1, 4));
    for (int i = 0; i < pieces; ++i) {
      std::vector<Rational> c;
      const int degree = static_cast<int>(testing::uniform(1, 3));
      for (int j = 0; j < degree; ++j) c.push_back(Rational(testing::uniform(-6, 6)));
      c.push_back(Rational(testing::uniform(1, 3)));
      q = q * UniPoly(c).pow(static_cast<unsigned>(testing::uniform(1, 2)));
    }
    // Up to four pieces of degree <= 3, squared: degree <= 24.
    const auto factors = factor_over_rationals(q, 32);
    CHECK(product(factors) == q.monic());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        CHECK(gcd(factors[i].factor, factors[j].factor).degree() == 0);
      }
    }
    for (const auto& root : rational_roots(q, 32)) CHECK(q.evaluate(root.value).is_zero());

    const auto layers = squarefree_split(q, 32);
    UniPoly rebuilt(Rational(1));
    for (const auto& layer : layers) {
      rebuilt = rebuilt * layer.factor.pow(layer.multiplicity);
      CHECK(gcd(layer.factor, layer.factor.derivative()).degree() == 0);
    }
    CHECK(rebuilt.monic() == q.monic());
  }
}

TEST_CASE("bivariate squarefree decomposition") {
  const Poly2 a = parse_poly("y^2 - x^3");
  const Poly2 b = parse_poly("x - y");
  const Poly2 f = a * a * b * parse_poly("x^2");
  const auto layers = squarefree_decompose(f);
  Poly2 rebuilt(1);
  for (const auto& [factor, multiplicity] : layers) rebuilt *= factor.pow(multiplicity);
  CHECK(exact_divide(f, rebuilt).has_value());
  CHECK(exact_divide(f, rebuilt)->is_constant());
  unsigned total = 0;
  for (const auto& [factor, multiplicity] : layers) total += multiplicity * factor.total_degree();
  CHECK(total == 9u);
  CHECK(gcd2(a * b, a * parse_poly("x + 1")) == gcd2(a, a));
}

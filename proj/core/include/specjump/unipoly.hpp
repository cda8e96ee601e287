#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specjump/poly2.hpp"
#include "specjump/rational.hpp"

namespace specjump {

/// Univariate polynomial over the rationals, coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// t^n with coefficient c.
  static UniPoly monomial(unsigned n, const Rational& c = Rational(1));
  /// Convenience for tests and tables: integer coefficients, lowest degree first.
  static UniPoly from_ints(std::initializer_list<long> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(unsigned i) const;
  Rational leading() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational evaluate(const Rational& t) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly pow(unsigned n) const;

  std::string str(std::string_view var = "v") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Embeds a univariate polynomial as a polynomial in variable `var` of Poly2.
Poly2 to_poly2(const UniPoly& p, int var);
/// Reads a Poly2 that only involves variable `var`.
UniPoly to_unipoly(const Poly2& p, int var);

}  // namespace specjump

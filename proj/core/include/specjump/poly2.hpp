#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "specjump/rational.hpp"

namespace specjump {

/// Exponent pair x^a * y^b.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;

  unsigned degree() const { return a + b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using VariableNames = std::array<std::string_view, 2>;
inline constexpr VariableNames kXY{"x", "y"};
inline constexpr VariableNames kUV{"u", "v"};

/// Sparse bivariate polynomial over the rationals. No stored coefficient is zero.
///
/// The two variables are positional; VariableNames only affects printing and
/// parsing. Chart-local polynomials use (u, v), the germ itself uses (x, y).
class Poly2 {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly2(int c) : Poly2(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly2 x() { return monomial(1, 0); }
  static Poly2 y() { return monomial(0, 1); }
  static Poly2 monomial(unsigned a, unsigned b, const Rational& coef = Rational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(unsigned a, unsigned b) const;
  Rational constant_term() const { return coefficient(0, 0); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(int var) const;

  /// Smallest total degree of a term; nullopt stands for infinity (zero polynomial).
  std::optional<unsigned> order() const;
  /// Largest k with var^k dividing the polynomial; nullopt for zero.
  std::optional<unsigned> adic_order(int var) const;

  /// Sum of the terms of total degree `degree`.
  Poly2 homogeneous_part(unsigned degree) const;
  /// Divides by x^a y^b; every term must be divisible.
  Poly2 divide_monomial(unsigned a, unsigned b) const;
  Poly2 derivative(int var) const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  /// Drops every term with exponent of `var` >= bound.
  Poly2 truncated(int var, unsigned bound) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  friend bool operator==(const Poly2&, const Poly2&) = default;

  Poly2 pow(unsigned n) const;

  /// Graded, x-major printing, e.g. "x^2*y - 1/2*y^3 + 1"; "0" for zero.
  std::string str(const VariableNames& names = kXY) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// Multiplicity of the germ at the origin; nullopt for the zero polynomial.
std::optional<unsigned> order_at_origin(const Poly2& p);

/// p(for_x, for_y), exact.
Poly2 substitute(const Poly2& p, const Poly2& for_x, const Poly2& for_y);

/// p(for_x, for_y) keeping only terms whose exponent of `var` is < bound.
Poly2 substitute_truncated(const Poly2& p, const Poly2& for_x, const Poly2& for_y, int var,
                           unsigned bound);

/// Product truncated in the exponent of `var`.
Poly2 multiply_truncated(const Poly2& a, const Poly2& b, int var, unsigned bound);

/// p / q when q divides p exactly in Q[x,y], nullopt otherwise.
std::optional<Poly2> exact_divide(const Poly2& p, const Poly2& q);

}  // namespace specjump

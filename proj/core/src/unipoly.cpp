#include "specjump/unipoly.hpp"

#include <algorithm>

#include "specjump/error.hpp"

namespace specjump {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(unsigned n, const Rational& c) {
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coefficients) {
  std::vector<Rational> coeffs;
  for (long c : coefficients) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly result(Rational(1));
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

std::string UniPoly::str(std::string_view var) const {
  Poly2 embedded = to_poly2(*this, 0);
  return embedded.str({var, "_"});
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DomainError, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational lb = b.leading();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lb;
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficient(static_cast<unsigned>(j));
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly2 to_poly2(const UniPoly& p, int var) {
  Poly2 out;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto e = static_cast<unsigned>(i);
    out += var == 0 ? Poly2::monomial(e, 0, cs[i]) : Poly2::monomial(0, e, cs[i]);
  }
  return out;
}

UniPoly to_unipoly(const Poly2& p, int var) {
  std::vector<Rational> coeffs(p.degree_in(var) + 1);
  for (const auto& [m, c] : p.terms()) {
    if ((var == 0 ? m.b : m.a) != 0) {
      throw Error(ErrorKind::InvalidArgument, "to_unipoly: polynomial involves the other variable");
    }
    coeffs[var == 0 ? m.a : m.b] = c;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace specjump

#include "specjump/squarefree2.hpp"

#include "specjump/error.hpp"
#include "specjump/factor.hpp"
#include "specjump/unipoly.hpp"

// Bivariate arithmetic viewed in Q[x][y]: coefficients in y are univariate in x.

namespace specjump {

namespace {

std::vector<UniPoly> y_coefficients(const Poly2& p) {
  std::vector<UniPoly> out(p.degree_in(1) + 1);
  std::vector<std::vector<Rational>> raw(out.size());
  for (const auto& [m, c] : p.terms()) {
    auto& slot = raw[m.b];
    if (slot.size() <= m.a) slot.resize(m.a + 1);
    slot[m.a] = c;
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = UniPoly(raw[j]);
  return out;
}

UniPoly y_content(const Poly2& p) {
  UniPoly g;
  for (const auto& c : y_coefficients(p)) g = gcd(g, c);
  return g;
}

Poly2 divide_exact(const Poly2& p, const Poly2& q) {
  auto r = exact_divide(p, q);
  if (!r) throw Error(ErrorKind::InvalidArgument, "internal: inexact bivariate division");
  return *r;
}

Poly2 y_primitive(const Poly2& p) {
  if (p.is_zero()) return p;
  return divide_exact(p, to_poly2(y_content(p), 0));
}

Poly2 leading_in_y(const Poly2& p, unsigned degree) {
  Poly2 out;
  for (const auto& [m, c] : p.terms()) {
    if (m.b == degree) out += Poly2::monomial(m.a, 0, c);
  }
  return out;
}

Poly2 pseudo_remainder(Poly2 a, const Poly2& b) {
  const unsigned db = b.degree_in(1);
  const Poly2 lb = leading_in_y(b, db);
  while (!a.is_zero() && a.degree_in(1) >= db) {
    const unsigned da = a.degree_in(1);
    const Poly2 la = leading_in_y(a, da);
    a = lb * a - la * Poly2::monomial(0, da - db) * b;
  }
  return a;
}

Poly2 normalized(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.terms().rbegin()->second);
}

}  // namespace

Poly2 gcd2(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const UniPoly content = gcd(y_content(a), y_content(b));
  Poly2 r0 = y_primitive(a);
  Poly2 r1 = y_primitive(b);
  if (r0.degree_in(1) < r1.degree_in(1)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    Poly2 r = pseudo_remainder(r0, r1);
    r0 = std::move(r1);
    r1 = y_primitive(r);
  }
  // A y-free remainder chain end means the primitive parts are coprime.
  Poly2 primitive = r0.degree_in(1) == 0 ? Poly2(1) : y_primitive(r0);
  return normalized(primitive * to_poly2(content, 0));
}

std::vector<std::pair<Poly2, unsigned>> squarefree_decompose(const Poly2& f) {
  if (f.is_zero()) throw Error(ErrorKind::DomainError, "squarefree decomposition of zero");
  std::vector<std::pair<Poly2, unsigned>> out;
  const UniPoly content = y_content(f);
  for (const auto& [layer, mult] : squarefree_layers(content)) {
    out.emplace_back(to_poly2(layer, 0), mult);
  }
  Poly2 b = y_primitive(f);
  if (b.degree_in(1) == 0) return out;
  const Poly2 df = b.derivative(1);
  const Poly2 a0 = gcd2(b, df);
  Poly2 c = divide_exact(df, a0);
  b = divide_exact(b, a0);
  Poly2 d = c - b.derivative(1);
  for (unsigned i = 1; b.degree_in(1) > 0; ++i) {
    const Poly2 a = gcd2(b, d);
    if (a.degree_in(1) > 0) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative(1);
  }
  return out;
}

}  // namespace specjump

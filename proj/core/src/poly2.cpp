#include "specjump/poly2.hpp"

#include <algorithm>
#include <vector>

#include "specjump/error.hpp"

namespace specjump {

namespace {

unsigned exponent(const Monomial& m, int var) { return var == 0 ? m.a : m.b; }

// Powers base^0 .. base^n, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(const Poly2& base) : base_(base) { powers_.emplace_back(Rational(1)); }

  const Poly2& get(unsigned n) {
    while (powers_.size() <= n) powers_.push_back(powers_.back() * base_);
    return powers_[n];
  }

 private:
  Poly2 base_;
  std::vector<Poly2> powers_;
};

class TruncatedPowerCache {
 public:
  TruncatedPowerCache(const Poly2& base, int var, unsigned bound)
      : base_(base.truncated(var, bound)), var_(var), bound_(bound) {
    powers_.emplace_back(Poly2(Rational(1)).truncated(var, bound));
  }

  const Poly2& get(unsigned n) {
    while (powers_.size() <= n) {
      powers_.push_back(multiply_truncated(powers_.back(), base_, var_, bound_));
    }
    return powers_[n];
  }

 private:
  Poly2 base_;
  int var_;
  unsigned bound_;
  std::vector<Poly2> powers_;
};

}  // namespace

Poly2::Poly2(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

Poly2 Poly2::monomial(unsigned a, unsigned b, const Rational& coef) {
  Poly2 p;
  p.add_term(Monomial{a, b}, coef);
  return p;
}

void Poly2::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational Poly2::coefficient(unsigned a, unsigned b) const {
  auto it = terms_.find(Monomial{a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

unsigned Poly2::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, var));
  return d;
}

std::optional<unsigned> Poly2::order() const {
  if (terms_.empty()) return std::nullopt;
  unsigned best = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
  return best;
}

std::optional<unsigned> Poly2::adic_order(int var) const {
  if (terms_.empty()) return std::nullopt;
  unsigned best = exponent(terms_.begin()->first, var);
  for (const auto& [m, c] : terms_) best = std::min(best, exponent(m, var));
  return best;
}

Poly2 Poly2::homogeneous_part(unsigned degree) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

Poly2 Poly2::divide_monomial(unsigned a, unsigned b) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (m.a < a || m.b < b) {
      throw Error(ErrorKind::InvalidArgument, "divide_monomial: term not divisible");
    }
    out.terms_.emplace(Monomial{m.a - a, m.b - b}, c);
  }
  return out;
}

Poly2 Poly2::derivative(int var) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = exponent(m, var);
    if (e == 0) continue;
    Monomial lowered = m;
    (var == 0 ? lowered.a : lowered.b) -= 1;
    out.add_term(lowered, c * Rational(static_cast<long>(e)));
  }
  return out;
}

Rational Poly2::evaluate(const Rational& x, const Rational& y) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    mpq_class px, py;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), m.a);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), m.a);
    Rational xa(num, den);
    mpz_pow_ui(num.get_mpz_t(), y.raw().get_num_mpz_t(), m.b);
    mpz_pow_ui(den.get_mpz_t(), y.raw().get_den_mpz_t(), m.b);
    Rational yb(num, den);
    sum += c * xa * yb;
  }
  return sum;
}

Poly2 Poly2::truncated(int var, unsigned bound) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    if (exponent(m, var) < bound) out.terms_.emplace(m, c);
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
    }
  }
  return out;
}

Poly2 Poly2::pow(unsigned n) const {
  Poly2 result(Rational(1));
  Poly2 base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Poly2::str(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() > r.first.degree();
    return l.first.a > r.first.a;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string body;
    auto append_factor = [&body](const std::string& f) {
      if (!body.empty()) body += "*";
      body += f;
    };
    const bool unit = magnitude == Rational(1);
    if (!unit || m.degree() == 0) append_factor(magnitude.str());
    if (m.a > 0) append_factor(std::string(names[0]) + (m.a > 1 ? "^" + std::to_string(m.a) : ""));
    if (m.b > 0) append_factor(std::string(names[1]) + (m.b > 1 ? "^" + std::to_string(m.b) : ""));
    out += body;
  }
  return out;
}

std::optional<unsigned> order_at_origin(const Poly2& p) { return p.order(); }

Poly2 substitute(const Poly2& p, const Poly2& for_x, const Poly2& for_y) {
  PowerCache xs(for_x);
  PowerCache ys(for_y);
  Poly2 out;
  for (const auto& [m, c] : p.terms()) out += (xs.get(m.a) * ys.get(m.b)) * c;
  return out;
}

Poly2 substitute_truncated(const Poly2& p, const Poly2& for_x, const Poly2& for_y, int var,
                           unsigned bound) {
  TruncatedPowerCache xs(for_x, var, bound);
  TruncatedPowerCache ys(for_y, var, bound);
  Poly2 out;
  for (const auto& [m, c] : p.terms()) {
    out += multiply_truncated(xs.get(m.a), ys.get(m.b), var, bound) * c;
  }
  return out;
}

Poly2 multiply_truncated(const Poly2& a, const Poly2& b, int var, unsigned bound) {
  Poly2 out;
  for (const auto& [ma, ca] : a.terms()) {
    if (exponent(ma, var) >= bound) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (exponent(ma, var) + exponent(mb, var) >= bound) continue;
      out += Poly2::monomial(ma.a + mb.a, ma.b + mb.b, ca * cb);
    }
  }
  return out;
}

std::optional<Poly2> exact_divide(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) throw Error(ErrorKind::DomainError, "exact_divide by zero polynomial");
  // Division by a single polynomial in lex order: the remainder is zero iff q | p.
  const auto& [lead_m, lead_c] = *q.terms().rbegin();
  Poly2 rest = p;
  Poly2 quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    if (m.a < lead_m.a || m.b < lead_m.b) return std::nullopt;
    const Poly2 step = Poly2::monomial(m.a - lead_m.a, m.b - lead_m.b, c / lead_c);
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

}  // namespace specjump

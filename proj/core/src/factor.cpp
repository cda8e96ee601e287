#include "specjump/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>

#include "specjump/error.hpp"

// Factorization over Q of small univariate polynomials: Yun's squarefree
// decomposition, then Zassenhaus on each squarefree primitive integer layer
// (Cantor-Zassenhaus mod p, quadratic Hensel lifting, subset recombination).

namespace specjump {

namespace {

using ZPoly = std::vector<BigInt>;      // integer coefficients, lowest first
using PPoly = std::vector<std::int64_t>;  // coefficients mod a word-size prime

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime p.

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_p(t, p);
}

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly p_sub(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod_p(out[i] - b[i], p);
  trim(out);
  return out;
}

PPoly p_mul(const PPoly& a, const PPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

std::pair<PPoly, PPoly> p_divmod(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly rem = a;
  if (deg(a) < deg(b)) return {{}, rem};
  const std::int64_t inv_lead = inv_mod(b.back(), p);
  PPoly quot(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
  for (int i = deg(a); i >= deg(b); --i) {
    const std::int64_t factor = rem[static_cast<std::size_t>(i)] * inv_lead % p;
    quot[static_cast<std::size_t>(i - deg(b))] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - deg(b) + j)];
      slot = mod_p(slot - factor * b[static_cast<std::size_t>(j)], p);
    }
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

PPoly p_monic(PPoly f, std::int64_t p) {
  if (f.empty()) return f;
  const std::int64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

PPoly p_gcd(PPoly a, PPoly b, std::int64_t p) {
  while (!b.empty()) {
    PPoly r = p_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return p_monic(a, p);
}

// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<PPoly, PPoly, PPoly> p_xgcd(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = p_divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, p_sub(s0, p_mul(q, s1, p), p));
    t0 = std::exchange(t1, p_sub(t0, p_mul(q, t1, p), p));
  }
  const std::int64_t inv = inv_mod(r0.back(), p);
  for (auto* v : {&r0, &s0, &t0}) {
    for (auto& c : *v) c = c * inv % p;
  }
  return {r0, s0, t0};
}

PPoly p_powmod(PPoly base, const BigInt& exponent, const PPoly& modulus, std::int64_t p) {
  PPoly result{1};
  base = p_divmod(base, modulus, p).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = p_divmod(p_mul(result, result, p), modulus, p).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) {
      result = p_divmod(p_mul(result, base, p), modulus, p).second;
    }
  }
  return result;
}

PPoly p_derivative(const PPoly& f, std::int64_t p) {
  PPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) {
    out.push_back(static_cast<std::int64_t>(i) % p * f[i] % p);
  }
  trim(out);
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PPoly, int>> distinct_degree(PPoly f, std::int64_t p) {
  std::vector<std::pair<PPoly, int>> out;
  const PPoly x{0, 1};
  PPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = p_powmod(h, BigInt(p), f, p);
    PPoly g = p_gcd(f, p_sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = p_divmod(f, g, p).first;
      h = p_divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.emplace_back(p_monic(f, p), deg(f));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p). Deterministic seed.
void equal_degree(const PPoly& f, int d, std::int64_t p, std::mt19937_64& rng,
                  std::vector<PPoly>& out) {
  if (deg(f) == d) {
    out.push_back(p_monic(f, p));
    return;
  }
  BigInt exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  while (true) {
    PPoly a(static_cast<std::size_t>(deg(f)), 0);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    PPoly b = p_sub(p_powmod(a, exponent, f, p), PPoly{1}, p);
    PPoly g = p_gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(p_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<PPoly> factor_mod_p(const PPoly& f, std::int64_t p) {
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(p));
  std::vector<PPoly> out;
  for (const auto& [g, d] : distinct_degree(p_monic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials and arithmetic mod m = p^k.

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

BigInt mod_m(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly z_reduce(ZPoly f, const BigInt& m) {
  for (auto& c : f) c = mod_m(c, m);
  trim(f);
  return f;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return z_reduce(std::move(out), m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return z_reduce(std::move(out), m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return z_reduce(std::move(out), m);
}

// Division by a monic polynomial mod m.
std::pair<ZPoly, ZPoly> z_divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly rem = z_reduce(a, m);
  if (deg(rem) < deg(b)) return {{}, rem};
  ZPoly quot(static_cast<std::size_t>(deg(rem) - deg(b) + 1));
  for (int i = deg(rem); i >= deg(b); --i) {
    const BigInt factor = mod_m(rem[static_cast<std::size_t>(i)], m);
    quot[static_cast<std::size_t>(i - deg(b))] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= deg(b); ++j) {
      rem[static_cast<std::size_t>(i - deg(b) + j)] -= factor * b[static_cast<std::size_t>(j)];
    }
  }
  return {z_reduce(std::move(quot), m), z_reduce(std::move(rem), m)};
}

ZPoly from_p(const PPoly& f) {
  ZPoly out;
  for (auto c : f) out.emplace_back(static_cast<long>(c));
  return out;
}

PPoly to_p(const ZPoly& f, std::int64_t p) {
  PPoly out;
  for (const auto& c : f) out.push_back(mod_m(c, BigInt(static_cast<long>(p))).get_si());
  trim(out);
  return out;
}

ZPoly scale_mod(const ZPoly& f, const BigInt& c, const BigInt& m) {
  ZPoly out = f;
  for (auto& v : out) v *= c;
  return z_reduce(std::move(out), m);
}

// Lifts f = g*h (mod p) to mod `target`, with h monic. One quadratic step per
// doubling of the exponent; the modulus never exceeds `target`.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const PPoly& g0, const PPoly& h0,
                                    std::int64_t p, const BigInt& target) {
  auto [unit, s0, t0] = p_xgcd(g0, h0, p);
  (void)unit;
  ZPoly g = from_p(g0), h = from_p(h0), s = from_p(s0), t = from_p(t0);
  BigInt m(static_cast<long>(p));
  while (m < target) {
    BigInt next = m * m;
    if (next > target) next = target;
    const ZPoly e = z_sub(f, z_mul(g, h, next), next);
    auto [q, r] = z_divmod_monic(z_mul(s, e, next), h, next);
    ZPoly g_new = z_add(z_add(g, z_mul(t, e, next), next), z_mul(q, g, next), next);
    ZPoly h_new = z_add(h, r, next);
    const ZPoly b = z_sub(z_add(z_mul(s, g_new, next), z_mul(t, h_new, next), next), ZPoly{1}, next);
    auto [c, d] = z_divmod_monic(z_mul(s, b, next), h_new, next);
    s = z_sub(s, d, next);
    t = z_sub(z_sub(t, z_mul(t, b, next), next), z_mul(c, g_new, next), next);
    g = std::move(g_new);
    h = std::move(h_new);
    m = next;
  }
  return {g, h};
}

// Lifts the monic mod-p factorization of f (with lc(f) a unit mod p) to mod M.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<PPoly>& factors,
                                    std::int64_t p, const BigInt& modulus) {
  if (factors.size() == 1) {
    BigInt inv;
    const BigInt lead = mod_m(f.back(), modulus);
    mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), modulus.get_mpz_t());
    return {scale_mod(f, inv, modulus)};
  }
  const std::size_t half = factors.size() / 2;
  PPoly g0 = to_p(ZPoly{f.back()}, p);
  PPoly h0{1};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i < half) {
      g0 = p_mul(g0, factors[i], p);
    } else {
      h0 = p_mul(h0, factors[i], p);
    }
  }
  auto [g, h] = hensel_lift(f, g0, h0, p, modulus);
  std::vector<PPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<PPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  std::vector<ZPoly> out = multifactor_lift(g, left, p, modulus);
  std::vector<ZPoly> rest = multifactor_lift(h, right, p, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

BigInt content(const ZPoly& f) {
  BigInt g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly f) {
  const BigInt c = content(f);
  if (c == 0) return f;
  for (auto& v : f) v /= c;
  if (!f.empty() && f.back() < 0) {
    for (auto& v : f) v = -v;
  }
  return f;
}

ZPoly symmetric(ZPoly f, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& c : f) {
    c = mod_m(c, m);
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

ZPoly integer_primitive(const UniPoly& q) {
  BigInt lcm_den = 1;
  for (const auto& c : q.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  ZPoly out;
  for (const auto& c : q.coefficients()) out.push_back(c.numerator() * (lcm_den / c.denominator()));
  return primitive_part(std::move(out));
}

UniPoly to_rational(const ZPoly& f) {
  std::vector<Rational> coeffs;
  for (const auto& c : f) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs));
}

bool divides(const ZPoly& g, const ZPoly& f) {
  return divmod(to_rational(f), to_rational(g)).second.is_zero();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Chooses a prime keeping f squarefree and of full degree; among the first few
// admissible primes the one with the fewest modular factors wins.
std::pair<std::int64_t, std::vector<PPoly>> choose_prime(const ZPoly& f) {
  std::int64_t best_p = 0;
  std::vector<PPoly> best;
  int admissible = 0;
  for (std::int64_t p = 3; admissible < 6; p += 2) {
    if (!is_prime(p)) continue;
    if (mod_m(f.back(), BigInt(static_cast<long>(p))) == 0) continue;
    const PPoly fp = to_p(f, p);
    if (deg(p_gcd(fp, p_derivative(fp, p), p)) > 0) continue;
    ++admissible;
    std::vector<PPoly> factors = factor_mod_p(fp, p);
    if (best_p == 0 || factors.size() < best.size()) {
      best_p = p;
      best = std::move(factors);
    }
    if (best.size() == 1) break;
  }
  return {best_p, best};
}

// Irreducible factors over Z of a primitive squarefree polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  auto [p, modular] = choose_prime(f);
  if (modular.size() == 1) return {f};

  // Mignotte: every factor of f has coefficients bounded by 2^n * ||f||_2.
  BigInt norm_sq = 0;
  for (const auto& c : f) norm_sq += c * c;
  BigInt norm = sqrt(norm_sq) + 1;
  BigInt bound = norm << static_cast<mp_bitcnt_t>(deg(f));
  const BigInt lead_abs = abs(f.back());
  const BigInt needed = 2 * lead_abs * bound + 1;
  BigInt modulus(static_cast<long>(p));
  while (modulus <= needed) modulus *= p;

  std::vector<ZPoly> lifted = multifactor_lift(f, modular, p, modulus);
  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  std::size_t subset_size = 1;
  while (2 * subset_size <= live.size()) {
    bool matched = false;
    std::vector<bool> mask(live.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(subset_size), true);
    do {
      ZPoly candidate{rest.back()};
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (mask[i]) candidate = z_mul(candidate, lifted[live[i]], modulus);
      }
      candidate = primitive_part(symmetric(candidate, modulus));
      if (deg(candidate) > 0 && divides(candidate, rest)) {
        found.push_back(candidate);
        const UniPoly quotient = divmod(to_rational(rest), to_rational(candidate)).first;
        rest = integer_primitive(quotient);
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (!mask[i]) remaining.push_back(live[i]);
        }
        live = std::move(remaining);
        matched = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!matched) ++subset_size;
  }
  if (deg(rest) > 0) found.push_back(rest);
  return found;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto idx = static_cast<unsigned>(i);
    if (a.coefficient(idx) != b.coefficient(idx)) return a.coefficient(idx) < b.coefficient(idx);
  }
  return false;
}

void check_input(const UniPoly& q, int max_degree) {
  if (q.is_zero()) throw Error(ErrorKind::DomainError, "cannot factor the zero polynomial");
  if (q.degree() > max_degree) {
    throw Error(ErrorKind::FactorDegreeExceeded,
                "factorization too large: degree " + std::to_string(q.degree()) +
                    " exceeds cap " + std::to_string(max_degree) + " for " + q.str());
  }
}

std::vector<UniPoly> irreducible_parts(const UniPoly& layer) {
  std::vector<UniPoly> parts;
  for (const auto& z : zassenhaus(integer_primitive(layer))) parts.push_back(to_rational(z).monic());
  std::sort(parts.begin(), parts.end(), poly_less);
  return parts;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> squarefree_layers(const UniPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::DomainError, "squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, unsigned>> out;
  const UniPoly f = q.monic();
  if (f.degree() <= 0) return out;
  const UniPoly df = f.derivative();
  const UniPoly a0 = gcd(f, df);
  UniPoly b = divmod(f, a0).first;
  UniPoly c = divmod(df, a0).first;
  UniPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

std::vector<SquarefreeFactor> squarefree_split(const UniPoly& q, int max_degree) {
  check_input(q, max_degree);
  std::vector<SquarefreeFactor> out;
  for (auto& [layer, mult] : squarefree_layers(q)) {
    out.push_back(SquarefreeFactor{layer, mult, irreducible_parts(layer)});
  }
  return out;
}

std::vector<IrreducibleFactor> factor_over_rationals(const UniPoly& q, int max_degree) {
  std::vector<IrreducibleFactor> out;
  for (const auto& layer : squarefree_split(q, max_degree)) {
    for (const auto& part : layer.irreducible_parts) {
      out.push_back(IrreducibleFactor{part, layer.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return poly_less(l.factor, r.factor);
  });
  return out;
}

std::vector<RationalRoot> rational_roots(const UniPoly& q, int max_degree) {
  std::vector<RationalRoot> out;
  for (const auto& f : factor_over_rationals(q, max_degree)) {
    if (f.factor.degree() == 1) out.push_back({-f.factor.coefficient(0), f.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.value < r.value; });
  return out;
}

}  // namespace specjump

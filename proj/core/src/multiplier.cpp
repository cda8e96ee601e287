#include "specjump/multiplier.hpp"

#include <algorithm>

#include "specjump/error.hpp"

namespace specjump {

std::int64_t DivisorOnY::operator[](std::string_view id) const {
  auto it = coefficients.find(id);
  return it == coefficients.end() ? 0 : it->second;
}

std::int64_t restriction_degree(const ResolutionData& data, const DivisorOnY& divisor,
                                std::string_view id) {
  std::int64_t degree = 0;
  for (const auto& [other, c] : divisor.coefficients) {
    if (c != 0) degree += c * data.intersection(other, id);
  }
  return degree;
}

void SpectrumTable::add(const Rational& alpha, std::int64_t n) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), alpha,
                             [](const SpectrumEntry& e, const Rational& a) { return e.alpha < a; });
  if (it != entries_.end() && it->alpha == alpha) {
    throw Error(ErrorKind::InvalidArgument, "spectrum entry for " + alpha.str() + " already present");
  }
  if (n == 0) return;
  entries_.insert(it, SpectrumEntry{alpha, n});
}

std::int64_t SpectrumTable::at(const Rational& alpha) const {
  for (const auto& e : entries_) {
    if (e.alpha == alpha) return e.n;
  }
  return 0;
}

void require_unit_interval(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) {
    throw Error(ErrorKind::DomainError, "alpha = " + alpha.str() + " lies outside (0,1]");
  }
}

std::int64_t denominator_of(const Rational& alpha) { return to_int64(alpha.denominator()); }

Rational lct(const ResolutionData& data) {
  if (data.components().empty()) {
    throw Error(ErrorKind::InvalidArgument, "lct of resolution data without components");
  }
  std::optional<Rational> best;
  for (const auto& c : data.components()) {
    const Rational value(c.k + 1, c.m);
    if (!best || value < *best) best = value;
  }
  return *best;
}

std::vector<Rational> candidate_alphas(const ResolutionData& data) {
  std::vector<Rational> out;
  for (const auto& c : data.components()) {
    for (std::int64_t numerator = c.k + 1; numerator <= c.m; ++numerator) {
      out.emplace_back(numerator, c.m);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DivisorOnY floor_divisor(const ResolutionData& data, const Rational& alpha) {
  DivisorOnY out;
  for (const auto& c : data.components()) {
    out.coefficients[c.id] = to_int64((alpha * Rational(c.m)).floor());
  }
  return out;
}

DivisorOnY inner_coefficients(const ResolutionData& data, const Rational& alpha) {
  require_unit_interval(alpha);
  const std::int64_t d = denominator_of(alpha);
  DivisorOnY out;
  for (const auto& c : data.components()) {
    const Rational scaled = alpha * Rational(c.m);
    const std::int64_t value = c.m % d == 0 ? c.k + 1 - to_int64(scaled.numerator())
                                            : c.k - to_int64(scaled.floor());
    out.coefficients[c.id] = value;
  }
  return out;
}

std::vector<std::string> inner_support(const ResolutionData& data, const Rational& alpha) {
  const std::int64_t d = denominator_of(alpha);
  std::vector<std::string> out;
  for (const auto& c : data.components()) {
    if (c.over_origin && c.m % d == 0) out.push_back(c.id);
  }
  return out;
}

std::int64_t inner_jump_multiplicity(const ResolutionData& data, const Rational& alpha) {
  const DivisorOnY line_bundle = inner_coefficients(data, alpha);
  const std::vector<std::string> support = inner_support(data, alpha);
  std::int64_t chi = 0;
  for (const auto& id : support) chi += 1 + restriction_degree(data, line_bundle, id);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      chi -= data.intersection(support[i], support[j]);
    }
  }
  return chi;
}

SpectrumTable inner_spectrum(const ResolutionData& data) {
  SpectrumTable table;
  for (const auto& alpha : candidate_alphas(data)) {
    table.add(alpha, inner_jump_multiplicity(data, alpha));
  }
  return table;
}

}  // namespace specjump

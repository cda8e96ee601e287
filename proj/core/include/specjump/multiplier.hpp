#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "specjump/rational.hpp"
#include "specjump/resolution.hpp"

namespace specjump {

/// Integer divisor on the resolution surface, keyed by component id.
struct DivisorOnY {
  std::map<std::string, std::int64_t, std::less<>> coefficients;

  std::int64_t operator[](std::string_view id) const;
  friend bool operator==(const DivisorOnY&, const DivisorOnY&) = default;
};

/// deg(L|_{E_i}) = sum_j c_j (E_j . E_i), using E_i^2 for j = i.
std::int64_t restriction_degree(const ResolutionData& data, const DivisorOnY& divisor,
                                std::string_view id);

struct SpectrumEntry {
  Rational alpha;
  std::int64_t n = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// alpha -> multiplicity on (0,1], ascending in alpha, zero entries omitted.
class SpectrumTable {
 public:
  /// Records n at alpha; zero is dropped, a repeated alpha is an error.
  void add(const Rational& alpha, std::int64_t n);
  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::int64_t at(const Rational& alpha) const;
  bool empty() const { return entries_.empty(); }
  friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Throws DomainError unless 0 < alpha <= 1.
void require_unit_interval(const Rational& alpha);

/// Denominator of alpha in lowest terms.
std::int64_t denominator_of(const Rational& alpha);

/// min_i (k_i + 1) / m_i over all components.
Rational lct(const ResolutionData& data);

/// {(k_i + 1 + n) / m_i : n >= 0} intersected with (0,1], ascending, deduplicated.
std::vector<Rational> candidate_alphas(const ResolutionData& data);

/// floor(alpha * mu^*D) as an integer divisor.
DivisorOnY floor_divisor(const ResolutionData& data, const Rational& alpha);

/// K_{Y/X} - floor((1 - eps) alpha mu^*D) for all small eps > 0: with d the
/// denominator of alpha, c_j = k_j + 1 - alpha m_j when d | m_j, else
/// c_j = k_j - floor(alpha m_j).
DivisorOnY inner_coefficients(const ResolutionData& data, const Rational& alpha);

/// Ids of the components over the origin whose multiplicity is divisible by d.
std::vector<std::string> inner_support(const ResolutionData& data, const Rational& alpha);

/// Euler characteristic of O_F(L) on the nodal curve F = union of inner_support,
/// L = inner_coefficients: sum over F of (1 + deg L|_{E_i}) minus the nodes of F.
std::int64_t inner_jump_multiplicity(const ResolutionData& data, const Rational& alpha);

/// inner_jump_multiplicity over candidate_alphas, zeros dropped.
SpectrumTable inner_spectrum(const ResolutionData& data);

}  // namespace specjump

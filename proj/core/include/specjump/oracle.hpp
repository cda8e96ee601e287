#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "specjump/poly2.hpp"
#include "specjump/rational.hpp"
#include "specjump/resolution.hpp"

namespace specjump {

/// Which side of alpha the floors are taken on: at alpha, or just below it.
enum class Side { At, Below };

struct RequiredOrder {
  std::string component;
  std::int64_t order = 0;
  friend bool operator==(const RequiredOrder&, const RequiredOrder&) = default;
};

/// Required orders b_i = floor(alpha m_i) - k_i over exceptional components;
/// only the ones with b_i > 0 are kept.
struct ValuationProfile {
  std::vector<RequiredOrder> conditions;
  std::int64_t max_order() const;
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

ValuationProfile valuation_profile(const ResolutionData& data, const Rational& alpha,
                                   Side side = Side::At);

/// ord_E(h o mu): the u-adic order of h pulled back through the chart of E.
unsigned valuation_order(const ResolutionData& data, std::string_view id, const Poly2& h);

struct OracleOptions {
  unsigned start_cutoff = 0;  // 0 picks 2 * max b_i
  unsigned max_cutoff = 64;
};

struct ColengthResult {
  std::int64_t colength = 0;
  unsigned cutoff = 0;  // degree bound at which the value was certified
};

/// dim C{x,y} / J(alpha D) at the origin, by exact linear algebra on
/// polynomials of bounded degree. Needs charts, reduced data and 0 < alpha < 1.
ColengthResult colength(const ResolutionData& data, const Rational& alpha, Side side = Side::At,
                        const OracleOptions& options = {});

struct OracleReport {
  std::vector<Rational> grid;
  std::vector<std::int64_t> colengths;          // colength at each grid point
  std::map<Rational, std::int64_t> jumps;       // nonzero jumps only
  unsigned cutoff = 0;                          // largest degree bound used
};

/// colength(alpha) - colength(alpha-) for each candidate.
std::map<Rational, std::int64_t> jump_sizes(const ResolutionData& data,
                                            const std::vector<Rational>& candidates,
                                            const OracleOptions& options = {});

/// Colengths along the grid together with the jumps at each grid point.
OracleReport oracle_report(const ResolutionData& data, const std::vector<Rational>& grid,
                           const OracleOptions& options = {});

}  // namespace specjump

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specjump/multiplier.hpp"
#include "specjump/oracle.hpp"
#include "specjump/rational.hpp"
#include "specjump/resolution.hpp"

namespace specjump {

/// A member of M: a single exceptional curve over the origin, or a pair of
/// components with m divisible by d that actually meet.
struct StratumIndex {
  std::vector<std::string> members;  // one or two ids, sorted
  std::int64_t points = 0;           // geometric point count for pairs, 0 for curves
  friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

std::vector<StratumIndex> strata(const ResolutionData& data, const Rational& alpha);

/// Spectrum multiplicity at alpha in (0,1] from the stratified sum over closed
/// strata twisted by floor(alpha mu^*D).
std::int64_t stratum_multiplicity(const ResolutionData& data, const Rational& alpha);

/// The same integer re-derived over open strata with the dimension filter on
/// the graded pieces; used as an internal cross-check.
std::int64_t stratum_multiplicity_expanded(const ResolutionData& data, const Rational& alpha);

/// stratum_multiplicity over candidate_alphas and every j / m_i with i over
/// the origin; zero entries dropped.
SpectrumTable spectrum_table(const ResolutionData& data);

/// Every alpha examined by spectrum_table, ascending.
std::vector<Rational> spectrum_alphas(const ResolutionData& data);

struct VerifyOptions {
  bool use_oracle = true;
  OracleOptions oracle;
};

struct VerifyRow {
  Rational alpha;
  std::int64_t inner = 0;
  std::int64_t stratum = 0;
  std::int64_t stratum_expanded = 0;
  std::optional<std::int64_t> oracle;
  std::string oracle_note;  // reason when the oracle was skipped or failed
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool passed = true;
  std::string twist_convention;
};

/// Compares both formulas (and the oracle where it applies) at every alpha of
/// spectrum_alphas. Problems are recorded in the rows, never thrown.
VerifyReport verify_theorem(const ResolutionData& data, const VerifyOptions& options = {});

}  // namespace specjump

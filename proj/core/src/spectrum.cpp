#include "specjump/spectrum.hpp"

#include <algorithm>

#include "specjump/error.hpp"

namespace specjump {

namespace {

struct Eligible {
  std::vector<const Component*> divisible;  // J_d
  std::int64_t d = 1;
};

Eligible eligible(const ResolutionData& data, const Rational& alpha) {
  require_unit_interval(alpha);
  Eligible out;
  out.d = denominator_of(alpha);
  for (const auto& c : data.components()) {
    if (c.m % out.d == 0) out.divisible.push_back(&c);
  }
  return out;
}

// Multiplicity of a pair point: a cluster of conjugate branches meets in
// cluster_degree points, already recorded in the intersection count.
std::int64_t pair_points(const ResolutionData& data, const Component& a, const Component& b) {
  return data.intersection(a.id, b.id);
}

}  // namespace

std::vector<StratumIndex> strata(const ResolutionData& data, const Rational& alpha) {
  const Eligible e = eligible(data, alpha);
  std::vector<StratumIndex> out;
  for (const Component* c : e.divisible) {
    if (c->over_origin) out.push_back(StratumIndex{{c->id}, 0});
  }
  for (std::size_t i = 0; i < e.divisible.size(); ++i) {
    for (std::size_t j = i + 1; j < e.divisible.size(); ++j) {
      const Component& a = *e.divisible[i];
      const Component& b = *e.divisible[j];
      if (!a.over_origin && !b.over_origin) continue;
      const std::int64_t points = pair_points(data, a, b);
      if (points == 0) continue;
      std::vector<std::string> ids{a.id, b.id};
      std::sort(ids.begin(), ids.end());
      out.push_back(StratumIndex{std::move(ids), points});
    }
  }
  return out;
}

std::int64_t stratum_multiplicity(const ResolutionData& data, const Rational& alpha) {
  const DivisorOnY twist = floor_divisor(data, alpha);
  std::int64_t sum = 0;
  for (const auto& s : strata(data, alpha)) {
    if (s.members.size() == 1) {
      sum += 1 + restriction_degree(data, twist, s.members.front());
    } else {
      sum -= s.points;
    }
  }
  // (-1)^(dim - 1) with dim = 2.
  return -sum;
}

std::int64_t stratum_multiplicity_expanded(const ResolutionData& data, const Rational& alpha) {
  const Eligible e = eligible(data, alpha);
  const DivisorOnY twist = floor_divisor(data, alpha);
  constexpr int dim = ResolutionData::kAmbientDimension;

  // Graded piece p of the twisted structure sheaf on the closed stratum E_S;
  // zero above the stratum's dimension.
  auto graded = [&](const std::vector<const Component*>& s, int p) -> std::int64_t {
    const int stratum_dim = dim - static_cast<int>(s.size());
    if (p > stratum_dim) return 0;
    if (p < stratum_dim) {
      throw Error(ErrorKind::InvalidArgument, "graded piece below the stratum dimension");
    }
    if (s.size() == 1) return 1 + restriction_degree(data, twist, s.front()->id);
    return pair_points(data, *s[0], *s[1]);
  };

  // Nonempty strata E_S with S inside J_d: curves and meeting pairs.
  std::vector<std::vector<const Component*>> closed;
  for (const Component* c : e.divisible) closed.push_back({c});
  for (std::size_t i = 0; i < e.divisible.size(); ++i) {
    for (std::size_t j = i + 1; j < e.divisible.size(); ++j) {
      if (pair_points(data, *e.divisible[i], *e.divisible[j]) > 0) {
        closed.push_back({e.divisible[i], e.divisible[j]});
      }
    }
  }

  // Each open stratum E_I^o is E_I minus the strata E_{I u L}; its class
  // expands to sum_L (-1)^|L| [E_{I u L}], and the layer I contributes
  // sum_i (-1)^i C(|I|-1, i) gr^{dim-1-i}.
  std::int64_t total = 0;
  for (const auto& s : closed) {
    const std::size_t size = s.size();
    for (unsigned mask = 1; mask < (1u << size); ++mask) {
      std::vector<const Component*> in_i;
      for (std::size_t b = 0; b < size; ++b) {
        if (mask & (1u << b)) in_i.push_back(s[b]);
      }
      const bool touches_origin =
          std::any_of(in_i.begin(), in_i.end(), [](const Component* c) { return c->over_origin; });
      if (!touches_origin) continue;
      const std::size_t l = size - in_i.size();
      const std::size_t width = in_i.size() - 1;
      std::int64_t binom = 1;
      for (std::size_t i = 0; i <= width; ++i) {
        const std::int64_t sign = ((l + i) % 2 == 0) ? 1 : -1;
        total += sign * binom * graded(s, dim - 1 - static_cast<int>(i));
        binom = binom * static_cast<std::int64_t>(width - i) / static_cast<std::int64_t>(i + 1);
      }
    }
  }
  return (dim - 1) % 2 == 0 ? total : -total;
}

std::vector<Rational> spectrum_alphas(const ResolutionData& data) {
  std::vector<Rational> out = candidate_alphas(data);
  for (const auto& c : data.components()) {
    if (!c.over_origin) continue;
    for (std::int64_t j = 1; j <= c.m; ++j) out.emplace_back(j, c.m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpectrumTable spectrum_table(const ResolutionData& data) {
  SpectrumTable table;
  for (const auto& alpha : spectrum_alphas(data)) table.add(alpha, stratum_multiplicity(data, alpha));
  return table;
}

VerifyReport verify_theorem(const ResolutionData& data, const VerifyOptions& options) {
  VerifyReport report;
  report.twist_convention =
      "strata twisted by O_Y(+floor(alpha mu^*D)) with alpha the spectrum exponent; "
      "the opposite sign disagrees with the multiplier side on the node, cusp and three-lines germs";

  std::string oracle_block;
  if (!options.use_oracle) {
    oracle_block = "skipped: oracle disabled";
  } else if (!data.has_charts()) {
    oracle_block = "skipped: no chart maps";
  } else if (!data.reduced()) {
    oracle_block = "skipped: non-reduced germ";
  }

  for (const auto& alpha : spectrum_alphas(data)) {
    VerifyRow row;
    row.alpha = alpha;
    try {
      row.inner = inner_jump_multiplicity(data, alpha);
      row.stratum = stratum_multiplicity(data, alpha);
      row.stratum_expanded = stratum_multiplicity_expanded(data, alpha);
      row.pass = row.inner == row.stratum && row.stratum == row.stratum_expanded;
    } catch (const Error& e) {
      row.pass = false;
      row.oracle_note = std::string("error: ") + e.what();
      report.passed = false;
      report.rows.push_back(std::move(row));
      continue;
    }
    if (!oracle_block.empty()) {
      row.oracle_note = oracle_block;
    } else if (alpha.is_integer()) {
      row.oracle_note = "skipped: infinite colength at alpha = 1";
    } else {
      try {
        row.oracle = jump_sizes(data, {alpha}, options.oracle).at(alpha);
        if (*row.oracle != row.inner) row.pass = false;
      } catch (const Error& e) {
        row.oracle_note = "failed: " + std::string(to_string(e.kind())) + ": " + e.what();
        row.pass = false;
      }
    }
    if (!row.pass) report.passed = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace specjump

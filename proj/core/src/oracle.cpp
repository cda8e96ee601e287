#include "specjump/oracle.hpp"

#include <algorithm>

#include "specjump/error.hpp"
#include "specjump/linalg.hpp"

namespace specjump {

std::int64_t ValuationProfile::max_order() const {
  std::int64_t best = 0;
  for (const auto& c : conditions) best = std::max(best, c.order);
  return best;
}

ValuationProfile valuation_profile(const ResolutionData& data, const Rational& alpha, Side side) {
  ValuationProfile out;
  for (const auto& c : data.components()) {
    if (!c.exceptional() || !c.over_origin) continue;
    const Rational scaled = alpha * Rational(c.m);
    std::int64_t floor = to_int64(scaled.floor());
    if (side == Side::Below && scaled.is_integer()) floor -= 1;
    const std::int64_t b = floor - c.k;
    if (b > 0) out.conditions.push_back(RequiredOrder{c.id, b});
  }
  return out;
}

unsigned valuation_order(const ResolutionData& data, std::string_view id, const Poly2& h) {
  if (!data.component(id).exceptional()) {
    throw Error(ErrorKind::InvalidArgument, "'" + std::string(id) + "' is not exceptional");
  }
  const ChartMap* chart = data.chart(id);
  if (chart == nullptr) {
    throw Error(ErrorKind::MissingCharts, "no chart map for component '" + std::string(id) + "'");
  }
  if (h.is_zero()) throw Error(ErrorKind::DomainError, "valuation of the zero polynomial");
  return *substitute(h, chart->x, chart->y).adic_order(0);
}

namespace {

void require_oracle_input(const ResolutionData& data, const Rational& alpha) {
  if (alpha.sign() <= 0) throw Error(ErrorKind::DomainError, "alpha must be positive");
  if (alpha >= Rational(1)) {
    throw Error(ErrorKind::OracleRefused, "colength is infinite for alpha >= 1");
  }
  if (!data.reduced()) {
    throw Error(ErrorKind::OracleRefused, "oracle needs a reduced germ (strict multiplicities 1)");
  }
  if (!data.has_charts()) {
    throw Error(ErrorKind::MissingCharts, "oracle needs chart maps for every exceptional component");
  }
}

struct Condition {
  const ChartMap* chart;
  unsigned order;
  unsigned ord_x;
  unsigned ord_y;
};

// Rank of the map from polynomials of degree <= n to the truncated pullbacks.
std::int64_t condition_rank(const std::vector<Condition>& conditions, unsigned n) {
  std::vector<Monomial> columns;
  for (unsigned deg = 0; deg <= n; ++deg) {
    for (unsigned a = 0; a <= deg; ++a) columns.push_back(Monomial{a, deg - a});
  }
  // One row per (condition, u^s v^t) coefficient with s < order.
  std::vector<std::map<Monomial, std::vector<Rational>>> rows(conditions.size());
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const Condition& c = conditions[i];
    const Poly2 x = c.chart->x.truncated(0, c.order);
    const Poly2 y = c.chart->y.truncated(0, c.order);
    std::vector<Poly2> x_pow{Poly2(1)};
    std::vector<Poly2> y_pow{Poly2(1)};
    for (unsigned e = 1; e <= n; ++e) {
      x_pow.push_back(multiply_truncated(x_pow.back(), x, 0, c.order));
      y_pow.push_back(multiply_truncated(y_pow.back(), y, 0, c.order));
    }
    for (std::size_t col = 0; col < columns.size(); ++col) {
      const Monomial mono = columns[col];
      if (mono.a * c.ord_x + mono.b * c.ord_y >= c.order) continue;
      const Poly2 image = multiply_truncated(x_pow[mono.a], y_pow[mono.b], 0, c.order);
      for (const auto& [term, coeff] : image.terms()) {
        auto& row = rows[i][term];
        if (row.empty()) row.assign(columns.size(), Rational(0));
        row[col] = coeff;
      }
    }
  }
  EchelonBasis basis(columns.size());
  for (const auto& per_condition : rows) {
    for (const auto& [term, row] : per_condition) basis.insert(row);
  }
  return static_cast<std::int64_t>(basis.rank());
}

}  // namespace

ColengthResult colength(const ResolutionData& data, const Rational& alpha, Side side,
                        const OracleOptions& options) {
  require_oracle_input(data, alpha);
  const ValuationProfile profile = valuation_profile(data, alpha, side);
  if (profile.conditions.empty()) return ColengthResult{0, 0};

  std::vector<Condition> conditions;
  for (const auto& req : profile.conditions) {
    const ChartMap* chart = data.chart(req.component);
    conditions.push_back(Condition{chart, static_cast<unsigned>(req.order),
                                   *chart->x.adic_order(0), *chart->y.adic_order(0)});
  }
  unsigned n = options.start_cutoff != 0
                   ? options.start_cutoff
                   : static_cast<unsigned>(std::max<std::int64_t>(1, 2 * profile.max_order()));
  while (n <= options.max_cutoff) {
    // Every monomial of degree n - 1 already lies in the ideal.
    const bool contained = std::all_of(conditions.begin(), conditions.end(), [n](const Condition& c) {
      return (n - 1) * std::min(c.ord_x, c.ord_y) >= c.order;
    });
    if (contained) {
      const std::int64_t r0 = condition_rank(conditions, n);
      const std::int64_t r1 = condition_rank(conditions, n + 1);
      const std::int64_t r2 = condition_rank(conditions, n + 2);
      if (r0 == r1 && r1 == r2) return ColengthResult{r0, n};
    }
    n *= 2;
  }
  throw Error(ErrorKind::NotStabilized,
              "colength at alpha = " + alpha.str() + " did not stabilize up to degree " +
                  std::to_string(options.max_cutoff));
}

std::map<Rational, std::int64_t> jump_sizes(const ResolutionData& data,
                                            const std::vector<Rational>& candidates,
                                            const OracleOptions& options) {
  std::map<Rational, std::int64_t> out;
  for (const auto& alpha : candidates) {
    out[alpha] = colength(data, alpha, Side::At, options).colength -
                 colength(data, alpha, Side::Below, options).colength;
  }
  return out;
}

OracleReport oracle_report(const ResolutionData& data, const std::vector<Rational>& grid,
                           const OracleOptions& options) {
  OracleReport report;
  report.grid = grid;
  std::sort(report.grid.begin(), report.grid.end());
  for (const auto& alpha : report.grid) {
    const ColengthResult at = colength(data, alpha, Side::At, options);
    const ColengthResult below = colength(data, alpha, Side::Below, options);
    report.colengths.push_back(at.colength);
    report.cutoff = std::max({report.cutoff, at.cutoff, below.cutoff});
    if (at.colength != below.colength) report.jumps[alpha] = at.colength - below.colength;
  }
  return report;
}

}  // namespace specjump

#include <doctest.h>

#include "specjump/error.hpp"
#include "specjump/parse.hpp"
#include "specjump/resolution_json.hpp"
#include "specjump/resolver.hpp"
#include "specjump/spectrum.hpp"
#include "support.hpp"

using namespace specjump;
using specjump::testing::data_path;

namespace {

ResolutionData file(const char* name) { return load_resolution(data_path(name)); }

// Spectrum of x^a + y^b on (0,1] by counting lattice points i/a + j/b.
std::vector<SpectrumEntry> lattice_spectrum(long a, long b) {
  std::map<Rational, std::int64_t> counts;
  for (long i = 1; i < a; ++i) {
    for (long j = 1; j < b; ++j) {
      const Rational alpha = Rational(i, a) + Rational(j, b);
      if (alpha <= Rational(1)) ++counts[alpha];
    }
  }
  std::vector<SpectrumEntry> out;
  for (const auto& [alpha, n] : counts) out.push_back({alpha, n});
  return out;
}

}  // namespace

TEST_CASE("strata of the node at alpha = 1") {
  const auto m = strata(file("node.json"), Rational(1));
  REQUIRE(m.size() == 3);
  CHECK(m[0] == StratumIndex{{"E1"}, 0});
  CHECK(m[1] == StratumIndex{{"E1", "S1"}, 1});
  CHECK(m[2] == StratumIndex{{"E1", "S2"}, 1});
}

TEST_CASE("strata only use components divisible by d") {
  const ResolutionData cusp = file("cusp.json");
  CHECK(strata(cusp, Rational(5, 6)) == std::vector<StratumIndex>{{{"E3"}, 0}});
  const auto half = strata(cusp, Rational(1, 2));
  CHECK(half == std::vector<StratumIndex>{{{"E1"}, 0}, {{"E3"}, 0}, {{"E1", "E3"}, 1}});
}

TEST_CASE("stratum multiplicity examples") {
  CHECK(stratum_multiplicity(file("cusp.json"), Rational(5, 6)) == 1);
  CHECK(stratum_multiplicity(file("node.json"), Rational(1)) == 1);
  CHECK(stratum_multiplicity(file("three_lines.json"), Rational(1)) == 2);
  CHECK(stratum_multiplicity(file("three_lines.json"), Rational(2, 3)) == 1);
  CHECK_THROWS_AS(stratum_multiplicity(file("cusp.json"), Rational(0)), Error);
  CHECK_THROWS_AS(stratum_multiplicity(file("cusp.json"), Rational(7, 6)), Error);
}

TEST_CASE("spectrum table examples") {
  CHECK(spectrum_table(file("cusp.json")).entries() == std::vector<SpectrumEntry>{{Rational(5, 6), 1}});
  CHECK(spectrum_table(file("three_lines.json")).entries() ==
        std::vector<SpectrumEntry>{{Rational(2, 3), 1}, {Rational(1), 2}});
  CHECK(spectrum_table(resolve_germ(parse_poly("y"))).empty());
}

TEST_CASE("both formulas and the open-strata sum agree on the corpus") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    for (const auto& alpha : spectrum_alphas(data)) {
      CAPTURE(alpha);
      const std::int64_t n = stratum_multiplicity(data, alpha);
      CHECK(n == inner_jump_multiplicity(data, alpha));
      CHECK(n == stratum_multiplicity_expanded(data, alpha));
      CHECK(n >= 0);
    }
    CHECK(spectrum_table(data) == inner_spectrum(data));
  }
}

TEST_CASE("both formulas agree after random extra blow-ups") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData original = resolve_germ(parse_poly(germ));
    ResolutionData data = original;
    for (int round = 0; round < 4; ++round) {
      std::vector<std::string> ids;
      for (const auto& c : data.components()) {
        if (c.exceptional()) ids.push_back(c.id);
      }
      data = extra_blowup(data, ids[static_cast<std::size_t>(testing::uniform(0, static_cast<long>(ids.size()) - 1))]);
      for (const auto& alpha : spectrum_alphas(data)) {
        CAPTURE(alpha);
        const std::int64_t n = stratum_multiplicity(data, alpha);
        CHECK(n == inner_jump_multiplicity(data, alpha));
        CHECK(n == stratum_multiplicity_expanded(data, alpha));
        CHECK(n == stratum_multiplicity(original, alpha));
        CHECK(n >= 0);
      }
    }
  }
}

TEST_CASE("quasi-homogeneous germs match the lattice count") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {2, 7}}) {
    CAPTURE(a);
    CAPTURE(b);
    const Poly2 f = Poly2::monomial(static_cast<unsigned>(a), 0) + Poly2::monomial(0, static_cast<unsigned>(b));
    const ResolutionData data = resolve_germ(f);
    CHECK(spectrum_table(data).entries() == lattice_spectrum(a, b));
  }
}

TEST_CASE("verify report on the corpus files") {
  const VerifyReport cusp = verify_theorem(file("cusp.json"));
  CHECK(cusp.passed);
  CHECK_FALSE(cusp.twist_convention.empty());
  for (const auto& row : cusp.rows) {
    CHECK(row.pass);
    CHECK_FALSE(row.oracle.has_value());
    CHECK(row.oracle_note == "skipped: no chart maps");
  }

  const VerifyReport node = verify_theorem(resolve_germ(parse_poly("x*y")));
  CHECK(node.passed);
  REQUIRE(node.rows.back().alpha == Rational(1));
  CHECK(node.rows.back().inner == 1);
  CHECK(node.rows.back().stratum == 1);
  CHECK_FALSE(node.rows.back().oracle.has_value());

  const VerifyReport blown = verify_theorem(extra_blowup(file("cusp.json"), "E3"));
  CHECK(blown.passed);
  for (const auto& row : blown.rows) {
    if (row.alpha == Rational(5, 6)) {
      CHECK(row.inner == 1);
      CHECK(row.stratum == 1);
    }
  }
}

TEST_CASE("verify reports disagreement instead of throwing") {
  ResolutionData bad = file("cusp.json");
  bad.component("E3").k = 3;
  const VerifyReport report = verify_theorem(bad);
  CHECK_FALSE(report.passed);
}

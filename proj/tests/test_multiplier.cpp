#include <doctest.h>

#include "specjump/error.hpp"
#include "specjump/multiplier.hpp"
#include "specjump/parse.hpp"
#include "specjump/resolution_json.hpp"
#include "specjump/resolver.hpp"
#include "support.hpp"

using namespace specjump;
using specjump::testing::data_path;

namespace {

ResolutionData file(const char* name) { return load_resolution(data_path(name)); }

ResolutionData smooth_data() {
  ResolutionData data;
  data.add_component(Component{"E1", ComponentKind::Exceptional, 1, 1, true, -1, 1});
  data.add_component(Component{"S1", ComponentKind::Strict, 1, 0, false, std::nullopt, 1});
  data.set_intersection("E1", "S1", 1);
  return data;
}

std::map<std::string, std::int64_t> coefficients(const DivisorOnY& d) {
  return {d.coefficients.begin(), d.coefficients.end()};
}

// K - floor((1 - eps) alpha mu^*D) with an explicit tiny eps, far below every
// gap between the values alpha m_j.
DivisorOnY coefficients_with_epsilon(const ResolutionData& data, const Rational& alpha) {
  const Rational eps(1, 1000000007);
  DivisorOnY out;
  for (const auto& c : data.components()) {
    const Rational scaled = (Rational(1) - eps) * alpha * Rational(c.m);
    out.coefficients[c.id] = c.k - to_int64(scaled.floor());
  }
  return out;
}

// Rational points of (0,1] with denominator up to 2 * max m.
std::vector<Rational> unit_grid(const ResolutionData& data) {
  std::int64_t top = 1;
  for (const auto& c : data.components()) top = std::max(top, 2 * c.m);
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= top; ++q) {
    for (std::int64_t p = 1; p <= q; ++p) out.emplace_back(p, q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("lct examples") {
  CHECK(lct(file("cusp.json")) == Rational(5, 6));
  CHECK(lct(file("node.json")) == Rational(1));
  CHECK(lct(file("three_lines.json")) == Rational(2, 3));
  CHECK_THROWS_AS(lct(ResolutionData()), Error);
}

TEST_CASE("candidate alphas examples") {
  CHECK(candidate_alphas(file("cusp.json")) == std::vector<Rational>{Rational(5, 6), Rational(1)});
  CHECK(candidate_alphas(file("node.json")) == std::vector<Rational>{Rational(1)});
  CHECK(candidate_alphas(smooth_data()) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("inner coefficients examples") {
  const ResolutionData cusp = file("cusp.json");
  using Map = std::map<std::string, std::int64_t>;
  CHECK(coefficients(inner_coefficients(cusp, Rational(5, 6))) == Map{{"E1", 0}, {"E2", 0}, {"E3", 0}, {"S1", 0}});
  CHECK(coefficients(inner_coefficients(cusp, Rational(1, 2))) == Map{{"E1", 1}, {"E2", 1}, {"E3", 2}, {"S1", 0}});
  CHECK(coefficients(inner_coefficients(file("node.json"), Rational(1))) ==
        Map{{"E1", 0}, {"S1", 0}, {"S2", 0}});
  CHECK_THROWS_AS(inner_coefficients(cusp, Rational(0)), Error);
  CHECK_THROWS_AS(inner_coefficients(cusp, Rational(3, 2)), Error);
}

TEST_CASE("the divisibility rule matches an explicit small epsilon") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    for (const auto& alpha : unit_grid(data)) {
      CAPTURE(alpha);
      CHECK(inner_coefficients(data, alpha) == coefficients_with_epsilon(data, alpha));
    }
  }
}

TEST_CASE("inner jump multiplicity examples") {
  const ResolutionData cusp = file("cusp.json");
  CHECK(inner_jump_multiplicity(cusp, Rational(5, 6)) == 1);
  CHECK(inner_jump_multiplicity(cusp, Rational(1, 2)) == 0);
  CHECK(inner_jump_multiplicity(cusp, Rational(1)) == 0);
  CHECK(inner_support(cusp, Rational(1, 2)) == std::vector<std::string>{"E1", "E3"});
  CHECK(inner_jump_multiplicity(file("three_lines.json"), Rational(1)) == 2);
  CHECK(inner_jump_multiplicity(file("node.json"), Rational(1)) == 1);
  CHECK(inner_jump_multiplicity(smooth_data(), Rational(1)) == 0);
  CHECK_THROWS_AS(inner_jump_multiplicity(cusp, Rational(-1, 2)), Error);
}

TEST_CASE("inner spectrum examples") {
  const auto cusp = inner_spectrum(file("cusp.json")).entries();
  CHECK(cusp == std::vector<SpectrumEntry>{{Rational(5, 6), 1}});
  const auto node = inner_spectrum(file("node.json")).entries();
  CHECK(node == std::vector<SpectrumEntry>{{Rational(1), 1}});
  CHECK(inner_spectrum(smooth_data()).empty());
}

TEST_CASE("spectrum table bookkeeping") {
  SpectrumTable t;
  t.add(Rational(2, 3), 1);
  t.add(Rational(1, 3), 0);
  t.add(Rational(1, 2), 2);
  CHECK(t.entries() == std::vector<SpectrumEntry>{{Rational(1, 2), 2}, {Rational(2, 3), 1}});
  CHECK(t.at(Rational(1, 3)) == 0);
  CHECK_THROWS_AS(t.add(Rational(1, 2), 1), Error);
}

TEST_CASE("multiplicities are nonnegative and vanish off the support") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    for (const auto& alpha : unit_grid(data)) {
      CAPTURE(alpha);
      const std::int64_t n = inner_jump_multiplicity(data, alpha);
      CHECK(n >= 0);
      if (inner_support(data, alpha).empty()) CHECK(n == 0);
    }
  }
}

TEST_CASE("resolution independence under extra blow-ups") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    const auto grid = unit_grid(data);
    for (const auto& c : data.components()) {
      if (!c.exceptional()) continue;
      CAPTURE(c.id);
      const ResolutionData blown = extra_blowup(data, c.id);
      CHECK(lct(blown) == lct(data));
      CHECK(inner_spectrum(blown) == inner_spectrum(data));
      for (const auto& alpha : grid) CHECK(inner_jump_multiplicity(blown, alpha) == inner_jump_multiplicity(data, alpha));
    }
  }
}

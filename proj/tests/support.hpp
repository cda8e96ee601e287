#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "specjump/poly2.hpp"
#include "specjump/rational.hpp"

namespace specjump::testing {

/// Seed for randomized properties: SPECJUMP_SEED when set, else a fixed value.
inline std::uint64_t seed() {
  if (const char* env = std::getenv("SPECJUMP_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240611;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  long den = uniform(1, bound);
  return Rational(uniform(-bound, bound), den);
}

/// Sparse polynomial with up to `terms` terms of total degree <= degree.
inline Poly2 random_poly(unsigned degree, int terms) {
  Poly2 p;
  for (int i = 0; i < terms; ++i) {
    const unsigned a = static_cast<unsigned>(uniform(0, degree));
    const unsigned b = static_cast<unsigned>(uniform(0, degree - a));
    p += Poly2::monomial(a, b, random_rational());
  }
  return p;
}

inline std::string data_path(const std::string& name) { return std::string(SPECJUMP_TEST_DATA) + "/" + name; }

/// Germs whose resolutions exercise tangent branches, clusters and several
/// Puiseux pairs; all reduced with an isolated singularity at the origin.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> germs{
      "x^2 + y^3",       "x*y",           "x^3 + y^3",          "y",
      "x^2 + y^5",       "x^3 + y^4",     "x^2 + y^2",          "x^5 + y^5",
      "(x^2 - y^3)*(x^3 - y^2)",          "(y^2 - x^3)^2 - 4*x^5*y - x^7",
      "y^2 - x^2 - x^3", "(y - x^2)*(y + x^2)",                 "y*(y - x^2)*(y - 2*x^2)",
      "x^4 + y^4 + x^2*y"};
  return germs;
}

}  // namespace specjump::testing

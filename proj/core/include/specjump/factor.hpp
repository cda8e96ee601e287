#pragma once

#include <vector>

#include "specjump/rational.hpp"
#include "specjump/unipoly.hpp"

namespace specjump {

inline constexpr int kDefaultMaxFactorDegree = 16;

/// One squarefree layer q_i of q = c * prod q_i^i, with its irreducible parts over Q.
struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  unsigned multiplicity = 0;
  std::vector<UniPoly> irreducible_parts;  // monic, sorted by degree then coefficients
};

struct IrreducibleFactor {
  UniPoly factor;  // monic, irreducible over Q
  unsigned multiplicity = 0;
};

struct RationalRoot {
  Rational value;
  unsigned multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Yun decomposition of a nonzero polynomial; layers are pairwise coprime.
std::vector<std::pair<UniPoly, unsigned>> squarefree_layers(const UniPoly& q);

/// Squarefree decomposition with every layer split into irreducibles over Q.
/// Throws FactorDegreeExceeded when deg q > max_degree, DomainError on zero input.
std::vector<SquarefreeFactor> squarefree_split(const UniPoly& q,
                                               int max_degree = kDefaultMaxFactorDegree);

/// Complete factorization over Q into monic irreducibles with multiplicities.
std::vector<IrreducibleFactor> factor_over_rationals(const UniPoly& q,
                                                     int max_degree = kDefaultMaxFactorDegree);

/// Rational roots with multiplicities, ascending.
std::vector<RationalRoot> rational_roots(const UniPoly& q,
                                         int max_degree = kDefaultMaxFactorDegree);

}  // namespace specjump

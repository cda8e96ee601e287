#pragma once

#include <utility>
#include <vector>

#include "specjump/poly2.hpp"

namespace specjump {

/// gcd in Q[x,y], normalized so the lex-leading coefficient is 1.
Poly2 gcd2(const Poly2& a, const Poly2& b);

/// f = c * prod f_i^{e_i} with f_i squarefree, pairwise coprime and nonconstant.
/// Layers come out x-content first, then by increasing multiplicity.
std::vector<std::pair<Poly2, unsigned>> squarefree_decompose(const Poly2& f);

}  // namespace specjump

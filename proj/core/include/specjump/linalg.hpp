#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "specjump/rational.hpp"

namespace specjump {

/// Row echelon basis over the integers, built one row at a time by
/// fraction-free elimination. Rational rows are scaled to primitive integer rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns) : columns_(columns) {}

  /// Reduces the row against the basis; returns true when it raised the rank.
  bool insert(const std::vector<Rational>& row);
  bool insert_integer(std::vector<BigInt> row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::map<std::size_t, std::vector<BigInt>> pivots_;  // pivot column -> row
};

/// Exact rank of a rational matrix given by rows.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace specjump

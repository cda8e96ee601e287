#include "specjump/linalg.hpp"

#include "specjump/error.hpp"

namespace specjump {

namespace {

void make_primitive(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

bool EchelonBasis::insert(const std::vector<Rational>& row) {
  BigInt scale = 1;
  for (const auto& v : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
  std::vector<BigInt> integer;
  integer.reserve(row.size());
  for (const auto& v : row) integer.push_back(v.numerator() * (scale / v.denominator()));
  return insert_integer(std::move(integer));
}

bool EchelonBasis::insert_integer(std::vector<BigInt> row) {
  if (row.size() != columns_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
  for (const auto& [col, pivot] : pivots_) {
    if (row[col] == 0) continue;
    const BigInt a = pivot[col];
    const BigInt b = row[col];
    for (std::size_t j = col; j < columns_; ++j) row[j] = a * row[j] - b * pivot[j];
    make_primitive(row);
  }
  for (std::size_t j = 0; j < columns_; ++j) {
    if (row[j] != 0) {
      make_primitive(row);
      pivots_.emplace(j, std::move(row));
      return true;
    }
  }
  return false;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

}  // namespace specjump

#pragma once

#include <cstddef>
#include <vector>

#include "arrfree/rational.hpp"
#include "arrfree/sparse_linalg.hpp"

namespace arrfree {

/// Prime modulus used for all modular ranks. Values are held in doubles in the balanced
/// range |v| <= p/2 + 1, so products of two values stay below 2^53.
inline constexpr long kModPrime = 67108859;  // 2^26 - 5

/// Image of q in GF(p) as a balanced representative; throws std::domain_error when p divides
/// the denominator.
double to_mod(const Rat& q);

/// Row echelon form over GF(p) built one row at a time. Pivot rows are stored densely from
/// their leading column onward.
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces the row against the current pivots and keeps it if it is independent.
  /// Returns true when the rank grew.
  bool add(const SparseVec& row);
  bool add_mod(const std::vector<std::pair<std::size_t, double>>& row);

 private:
  bool reduce_and_insert(std::size_t lo, std::size_t hi);

  struct PivotRow {
    std::size_t lead;
    std::vector<double> values;
  };
  std::size_t cols_;
  std::vector<long> pivot_of_;
  std::vector<PivotRow> rows_;
  std::vector<double> acc_;
};

}  // namespace arrfree

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "arrfree/rational.hpp"

namespace arrfree {

/// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

/// Homogeneous linear system "rows * v = 0" over `cols` unknowns.
struct SparseSystem {
  std::size_t cols = 0;
  std::vector<SparseVec> rows;
};

/// Reduced row-echelon form of a set of sparse rows.
struct SparseRref {
  std::size_t cols = 0;
  std::vector<SparseVec> rows;        // one per pivot, ordered by pivot column
  std::vector<std::size_t> pivots;    // strictly increasing
};

SparseRref sparse_rref(const std::vector<SparseVec>& rows, std::size_t cols);

/// Eliminates the pivot columns of `basis` from v (v minus its projection along the pivots).
SparseVec reduce_against(const SparseRref& basis, SparseVec v);

/// Canonical kernel basis: the reduced row-echelon form of the solution space.
std::vector<SparseVec> sparse_kernel(const SparseSystem& system);

enum class RankMethod {
  Exact,     // rational elimination
  Modular,   // elimination over GF(p), see modular.hpp
};

std::size_t rank_exact(const SparseSystem& system);
/// Rank of the system reduced modulo kModPrime. This never exceeds
/// the rational rank and agrees with it unless the prime divides every maximal
/// nonvanishing minor.
std::size_t rank_modular(const SparseSystem& system);
std::size_t rank(const SparseSystem& system, RankMethod method);

SparseVec sparse_add_scaled(const SparseVec& a, const SparseVec& b, const Rat& factor);
std::vector<Rat> to_dense(const SparseVec& v, std::size_t n);
SparseVec to_sparse(const std::vector<Rat>& v);

}  // namespace arrfree

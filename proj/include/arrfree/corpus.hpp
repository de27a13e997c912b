#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arrfree/arrangement.hpp"

namespace arrfree {

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coordinate hyperplanes x_i = 0.
Arrangement boolean_arrangement(long l);
/// x_i - x_j (i < j) in n variables; rank n - 1.
Arrangement braid_arrangement(long n);
/// The braid arrangement in coordinates y_i = x_i - x_n (i < n): y_i and y_i - y_j.
Arrangement braid_essential_arrangement(long n);
/// m normals with small integer entries drawn from std::minstd_rand(seed), redrawn until
/// every min(l, m) of them are linearly independent.
Arrangement generic_arrangement(long l, long m, std::uint32_t seed);

/// Dispatch by name: boolean(l), braid(n), braid_essential(n), generic(l, m[, seed=1]).
Arrangement corpus(std::string_view name, std::span<const long> params);
/// Parses "name:p1:p2..." and dispatches to corpus().
Arrangement corpus_from_spec(std::string_view spec);

}  // namespace arrfree

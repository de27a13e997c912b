#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arrfree/multipoly.hpp"

namespace arrfree {

/// Number of monomials of degree d in n variables (0 for d < 0).
std::size_t count_monomials(std::size_t n, int d);

/// Monomials of a fixed degree in descending grlex order, with constant-time lookup.
/// Packs exponents into 8-bit fields, so n <= 8 and d <= 255.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree);

  std::size_t nvars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return monos_.size(); }
  const Exponent& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Exponent>& monomials() const { return monos_; }
  /// Throws std::out_of_range for a monomial of another degree.
  std::size_t index_of(const Exponent& e) const;

  static std::uint64_t pack(const Exponent& e);

 private:
  std::size_t n_;
  int d_;
  std::vector<Exponent> monos_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// p-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p);
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace arrfree

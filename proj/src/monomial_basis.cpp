#include "arrfree/monomial_basis.hpp"

#include <functional>
#include <stdexcept>

namespace arrfree {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t count_monomials(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<std::size_t>(d) + n - 1, n - 1);
}

MonomialBasis::MonomialBasis(std::size_t nvars, int degree) : n_(nvars), d_(degree) {
  if (n_ > 8 || degree > 255) throw std::invalid_argument("MonomialBasis supports at most 8 variables and degree 255");
  if (degree < 0) return;
  Exponent e(n_, 0);
  // Lex-descending enumeration: x1 takes its largest value first.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i + 1 == n_) {
      e[i] = remaining;
      monos_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, remaining - k);
    }
  };
  if (n_ == 0) {
    if (degree == 0) monos_.push_back(e);
  } else {
    rec(0, degree);
  }
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(pack(monos_[i]), i);
}

std::uint64_t MonomialBasis::pack(const Exponent& e) {
  std::uint64_t key = 0;
  for (int x : e) key = (key << 8U) | static_cast<std::uint64_t>(x);
  return key;
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(pack(e));
  if (it == index_.end() || e.size() != n_) throw std::out_of_range("monomial not in basis");
  return it->second;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> cur(p);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (p - pos) <= n; ++i) {
      cur[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace arrfree

#pragma once
// Reference computations used to cross-check the library. Each one goes through a different
// route than the production code: subset sums instead of Mobius recursion, direct substitution
// instead of chart bookkeeping, dense elimination instead of sparse/modular ranks.

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/log_modules.hpp"
#include "arrfree/multipoly.hpp"
#include "arrfree/rational.hpp"
#include "arrfree/unipoly.hpp"

namespace oracle {

using arrfree::Exponent;
using arrfree::MultiPoly;
using arrfree::Rat;
using arrfree::UniPoly;
using Rows = std::vector<std::vector<Rat>>;

inline std::size_t dense_rank(Rows m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

inline std::size_t monomials(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  return binom(d + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
}

/// sum over subsets S of (-1)^|S| t^(l - rank S)
inline UniPoly whitney_char_poly(const std::vector<std::vector<Rat>>& normals, std::size_t l) {
  std::vector<Rat> c(l + 1, Rat(0));
  std::size_t m = normals.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Rows rows;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) rows.push_back(normals[i]);
    std::size_t r = dense_rank(rows);
    c[l - r] += (std::popcount(mask) % 2) ? -1 : 1;
  }
  return UniPoly(c);
}

/// Hyperplanes of the restriction to alpha = 0, in the coordinates other than alpha's first
/// nonzero one, with the number of hyperplanes cutting each trace.
inline std::vector<std::pair<std::vector<Rat>, int>> restrict_normals(const std::vector<std::vector<Rat>>& normals,
                                                                      std::size_t h) {
  const auto& a = normals[h];
  std::size_t piv = 0;
  while (a[piv] == 0) ++piv;
  std::vector<std::pair<std::vector<Rat>, int>> out;
  for (std::size_t j = 0; j < normals.size(); ++j) {
    if (j == h) continue;
    std::vector<Rat> b;
    Rat f = normals[j][piv] / a[piv];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != piv) b.push_back(normals[j][i] - f * a[i]);
    std::size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead == b.size()) continue;
    Rat s = b[lead];
    for (auto& x : b) x /= s;
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == b; });
    if (it == out.end()) out.push_back({b, 1});
    else ++it->second;
  }
  return out;
}

/// chi(A) = chi(A - H) - chi(A^H), down to the empty arrangement t^l.
inline UniPoly deletion_restriction(const std::vector<std::vector<Rat>>& normals, std::size_t l) {
  if (normals.empty()) return UniPoly::monomial(static_cast<int>(l));
  std::size_t h = normals.size() - 1;
  std::vector<std::vector<Rat>> del(normals.begin(), normals.end() - 1);
  std::vector<std::vector<Rat>> res;
  for (auto& [b, k] : restrict_normals(normals, h)) res.push_back(b);
  return deletion_restriction(del, l) - deletion_restriction(res, l - 1);
}

inline std::vector<std::vector<Rat>> normals_of(const arrfree::Arrangement& arr) {
  std::vector<std::vector<Rat>> out;
  for (const auto& f : arr.hyperplanes()) out.push_back(f.coeffs());
  return out;
}

inline std::vector<Exponent> all_monomials(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return d == 0 ? std::vector<Exponent>{Exponent{}} : out;
  rec(rec, 0, d);
  return out;
}

/// Substitutes x_piv = (u - sum_{j != piv} a_j x_j) / a_piv, storing u in slot piv. Then
/// alpha^k divides f exactly when every term has slot-piv exponent >= k.
inline MultiPoly in_alpha_coordinates(const MultiPoly& f, const std::vector<Rat>& a) {
  std::size_t n = a.size();
  std::size_t piv = 0;
  while (a[piv] == 0) ++piv;
  std::vector<MultiPoly> img;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != piv) {
      img.push_back(MultiPoly::variable(n, i));
      continue;
    }
    MultiPoly x = MultiPoly::variable(n, piv);
    for (std::size_t j = 0; j < n; ++j)
      if (j != piv && a[j] != 0) x -= MultiPoly::variable(n, j) * a[j];
    img.push_back(x * (Rat(1) / a[piv]));
  }
  return f.substitute(img);
}

inline std::size_t first_nonzero(const std::vector<Rat>& a) {
  std::size_t p = 0;
  while (a[p] == 0) ++p;
  return p;
}

/// Rows (one per surviving monomial) saying that the terms of low slot-piv degree vanish.
/// contributions[u] is the polynomial contributed by unknown u.
inline void low_order_rows(const std::vector<MultiPoly>& contributions, const std::vector<Rat>& a, int k,
                           std::map<Exponent, std::vector<Rat>>& rows) {
  std::size_t piv = first_nonzero(a);
  for (std::size_t u = 0; u < contributions.size(); ++u) {
    MultiPoly g = in_alpha_coordinates(contributions[u], a);
    for (const auto& [e, c] : g.terms()) {
      if (e[piv] >= k) continue;
      auto& row = rows[e];
      row.resize(contributions.size(), Rat(0));
      row[u] += c;
    }
  }
}

inline std::size_t kernel_dim(std::size_t unknowns, const std::map<Exponent, std::vector<Rat>>& rows) {
  Rows m;
  for (const auto& [e, r] : rows) m.push_back(r);
  return unknowns - dense_rank(m);
}

/// dim D(A,k)_d by direct substitution in each hyperplane's coordinates. With kill = h, the
/// derivations must also annihilate alpha_h.
inline std::size_t der_dim(const arrfree::Multiarrangement& ma, int d, long kill = -1) {
  std::size_t l = ma.dim();
  auto monos = all_monomials(l, d);
  std::size_t unknowns = l * monos.size();
  std::map<Exponent, std::vector<Rat>> killed;
  Rows all;
  for (std::size_t h = 0; h < ma.size(); ++h) {
    const auto& a = ma[h].coeffs();
    std::vector<MultiPoly> contrib;
    for (std::size_t i = 0; i < l; ++i)
      for (const auto& e : monos) contrib.push_back(MultiPoly::monomial(e, a[i]));
    std::map<Exponent, std::vector<Rat>> rows;
    low_order_rows(contrib, a, ma.multiplicity(h), rows);
    for (auto& [e, r] : rows) all.push_back(r);
    if (static_cast<long>(h) != kill) continue;
    for (std::size_t u = 0; u < unknowns; ++u)
      for (const auto& [e, c] : contrib[u].terms()) {
        auto& row = killed[e];
        row.resize(unknowns, Rat(0));
        row[u] += c;
      }
  }
  for (auto& [e, r] : killed) all.push_back(r);
  return unknowns - dense_rank(all);
}

/// dim Omega^1(A)_d of a simple arrangement as the forms pairing into S with every given
/// derivation (the generators of D(A)).
inline std::size_t omega1_dim_by_pairing(const arrfree::Arrangement& arr,
                                         const std::vector<arrfree::Derivation>& gens, int d) {
  std::size_t l = arr.dim();
  int a = d - 1 + static_cast<int>(arr.size());
  auto monos = all_monomials(l, a);
  std::size_t unknowns = l * monos.size();
  Rows all;
  for (const auto& g : gens) {
    std::vector<MultiPoly> contrib;
    for (std::size_t i = 0; i < l; ++i)
      for (const auto& e : monos) contrib.push_back(g.coeffs[i] * MultiPoly::monomial(e, Rat(1)));
    for (std::size_t h = 0; h < arr.size(); ++h) {
      std::map<Exponent, std::vector<Rat>> rows;
      low_order_rows(contrib, arr[h].coeffs(), 1, rows);
      for (auto& [e, r] : rows) all.push_back(r);
    }
  }
  return unknowns - dense_rank(all);
}

/// Graded dimension of a free module with the given generator degrees.
inline std::size_t free_dim(std::size_t l, const std::vector<int>& degrees, int d) {
  std::size_t s = 0;
  for (int e : degrees) s += monomials(l, d - e);
  return s;
}

/// dim Omega^p_d of a free multiarrangement: exterior powers of the dual basis, whose elements
/// have degree 1 - e_i.
inline std::size_t free_form_dim(std::size_t l, const std::vector<int>& exps, int p, int d) {
  std::size_t s = 0;
  std::size_t n = exps.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) deg += 1 - exps[i];
    s += monomials(l, d - deg);
  }
  return s;
}

}  // namespace oracle

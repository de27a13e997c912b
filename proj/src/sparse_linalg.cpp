#include "arrfree/sparse_linalg.hpp"

#include "arrfree/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrfree {

SparseVec sparse_add_scaled(const SparseVec& a, const SparseVec& b, const Rat& factor) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second + factor * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Rat> to_dense(const SparseVec& v, std::size_t n) {
  std::vector<Rat> out(n, Rat(0));
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVec to_sparse(const std::vector<Rat>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  }
  return out;
}

namespace {

void normalize_leading(SparseVec& v) {
  Rat inv = Rat(1) / v.front().second;
  for (auto& [i, x] : v) x *= inv;
}

}  // namespace

SparseRref sparse_rref(const std::vector<SparseVec>& input, std::size_t cols) {
  std::vector<std::ptrdiff_t> pivot_of(cols, -1);
  std::vector<SparseVec> echelon;
  echelon.reserve(std::min(input.size(), cols));

  // Forward pass: leading-term reduction only. Sparse rows first to limit fill-in.
  std::vector<std::size_t> order(input.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return input[a].size() < input[b].size(); });
  for (std::size_t idx : order) {
    SparseVec v = input[idx];
    while (!v.empty()) {
      std::size_t c = v.front().first;
      if (c >= cols) throw std::out_of_range("sparse_rref: column index out of range");
      std::ptrdiff_t p = pivot_of[c];
      if (p < 0) {
        normalize_leading(v);
        pivot_of[c] = static_cast<std::ptrdiff_t>(echelon.size());
        echelon.push_back(std::move(v));
        break;
      }
      Rat f = -v.front().second;
      v = sparse_add_scaled(v, echelon[p], f);
    }
  }

  // Backward pass: clear every pivot column from the other rows, highest pivot first.
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of[c] >= 0) pivots.push_back(c);
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVec& row = echelon[pivot_of[*it]];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        std::size_t j = row[k].first;
        if (pivot_of[j] >= 0) {
          Rat f = -row[k].second;
          row = sparse_add_scaled(row, echelon[pivot_of[j]], f);
          changed = true;
          break;
        }
      }
    }
  }

  SparseRref out;
  out.cols = cols;
  out.pivots = pivots;
  for (std::size_t c : pivots) out.rows.push_back(std::move(echelon[pivot_of[c]]));
  return out;
}

SparseVec reduce_against(const SparseRref& basis, SparseVec v) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    std::size_t c = basis.pivots[i];
    auto it = std::lower_bound(v.begin(), v.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it == v.end() || it->first != c) continue;
    Rat f = -it->second;
    v = sparse_add_scaled(v, basis.rows[i], f);
  }
  return v;
}

std::vector<SparseVec> sparse_kernel(const SparseSystem& system) {
  SparseRref r = sparse_rref(system.rows, system.cols);
  std::vector<bool> is_pivot(system.cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  // Column f of the RREF, read off row by row.
  std::vector<SparseVec> column_entries(system.cols);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (const auto& [j, x] : r.rows[i]) {
      if (!is_pivot[j]) column_entries[j].emplace_back(r.pivots[i], -x);
    }
  }
  std::vector<SparseVec> kernel;
  for (std::size_t f = 0; f < system.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = std::move(column_entries[f]);
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  if (kernel.empty()) return kernel;
  return sparse_rref(kernel, system.cols).rows;
}

std::size_t rank_exact(const SparseSystem& system) {
  // Forward elimination suffices for the rank.
  std::vector<std::ptrdiff_t> pivot_of(system.cols, -1);
  std::vector<SparseVec> echelon;
  std::vector<std::size_t> order(system.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return system.rows[a].size() < system.rows[b].size();
  });
  for (std::size_t idx : order) {
    SparseVec v = system.rows[idx];
    while (!v.empty()) {
      std::size_t c = v.front().first;
      std::ptrdiff_t p = pivot_of[c];
      if (p < 0) {
        normalize_leading(v);
        pivot_of[c] = static_cast<std::ptrdiff_t>(echelon.size());
        echelon.push_back(std::move(v));
        break;
      }
      Rat f = -v.front().second;
      v = sparse_add_scaled(v, echelon[p], f);
    }
  }
  return echelon.size();
}

std::size_t rank_modular(const SparseSystem& system) {
  std::vector<std::size_t> order(system.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return system.rows[a].size() < system.rows[b].size();
  });
  ModEchelon ech(system.cols);
  for (std::size_t idx : order) ech.add(system.rows[idx]);
  return ech.rank();
}

std::size_t rank(const SparseSystem& system, RankMethod method) {
  return method == RankMethod::Exact ? rank_exact(system) : rank_modular(system);
}

}  // namespace arrfree

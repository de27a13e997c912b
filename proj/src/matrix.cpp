#include "arrfree/matrix.hpp"

#include <utility>

namespace arrfree {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> RatMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = *this;
  Rat det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && is_zero(m.at(p, c))) ++p;
    if (p == rows_) return Rat(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (is_zero(m.at(r, c))) continue;
      Rat f = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

std::size_t RatMatrix::rank() const { return rref(*this).pivots.size(); }

RrefResult rref(const RatMatrix& input) {
  RatMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    Rat inv = Rat(1) / m.at(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m.at(r, c))) continue;
      Rat f = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // Canonical form: reduced echelon form of the kernel itself.
  RatMatrix k = RatMatrix::from_rows(basis, m.cols());
  RrefResult kr = rref(k);
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < kr.pivots.size(); ++i) out.push_back(kr.matrix.row_vector(i));
  return out;
}

}  // namespace arrfree

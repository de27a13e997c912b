#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "arrfree/rational.hpp"

namespace arrfree {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Rat> row_vector(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  std::vector<Rat> apply(std::span<const Rat> v) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  Rat determinant() const;
  /// Throws SingularMatrix.
  RatMatrix inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot columns strictly increasing.
RrefResult rref(const RatMatrix& m);

/// Basis of the right kernel, returned in reduced row-echelon form.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

}  // namespace arrfree

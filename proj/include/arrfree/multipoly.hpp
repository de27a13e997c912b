#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arrfree/rational.hpp"

namespace arrfree {

using Exponent = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins, ties broken
/// lexicographically with x1 > x2 > ... > xn.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored, so equality is term-map equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rat, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponent e, const Rat& c);
  /// sum_i coeffs[i] * x_{i+1}
  static MultiPoly linear(std::span<const Rat> coeffs);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rat coefficient(const Exponent& e) const;
  /// Requires a nonzero polynomial.
  const Exponent& leading_exponent() const;
  const Rat& leading_coefficient() const;

  void add_term(const Exponent& e, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& c);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned n) const;
  /// Replaces x_i by images[i]; all images must share the same number of variables.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  MultiPoly derivative(std::size_t var) const;
  /// Multiplies by x_var^k.
  MultiPoly shift(std::size_t var, int k) const;
  /// Sets x_var = 0 and removes that variable (nvars decreases by one).
  MultiPoly restrict_to_zero(std::size_t var) const;
  /// Keeps only the terms whose x_var exponent equals k.
  MultiPoly slice(std::size_t var, int k) const;

  /// Human-readable form in descending grlex order, e.g. "x1^2 - 3/2*x2*x3 + 1".
  std::string to_string(std::string_view var = "x") const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Returns q with q * b == a. Throws NotDivisible if the remainder is nonzero.
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);

/// True iff b divides a exactly.
bool poly_divides(const MultiPoly& b, const MultiPoly& a);

/// Parses the format produced by MultiPoly::to_string.
MultiPoly parse_multipoly(std::string_view text, std::size_t nvars, std::string_view var = "x");

}  // namespace arrfree

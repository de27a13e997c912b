#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arrfree/rational.hpp"

namespace arrfree {

/// Dense univariate polynomial, coefficients in ascending powers, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly x();
  /// x^k
  static UniPoly monomial(int k, const Rat& c = Rat(1));
  /// prod (x - r)
  static UniPoly from_roots(std::span<const int> roots);

  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  UniPoly monic() const;
  /// Multiplicity of r as a root (0 if not a root; requires nonzero polynomial).
  int root_multiplicity(const Rat& r) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned n) const;

  /// Human-readable form in descending powers, e.g. "t^3 - 3*t^2 + 3*t - 1".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace arrfree

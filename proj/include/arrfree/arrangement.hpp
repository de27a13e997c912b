#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrfree/matrix.hpp"
#include "arrfree/multipoly.hpp"
#include "arrfree/rational.hpp"

namespace arrfree {

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonzero linear form, scaled so that its first nonzero coefficient is 1.
class LinForm {
 public:
  /// Throws ArrangementError for the zero form.
  static LinForm canonical(std::vector<Rat> coeffs);

  std::size_t dim() const { return c_.size(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  /// Index of the first nonzero coefficient (which equals 1).
  std::size_t pivot() const;
  MultiPoly to_poly() const { return MultiPoly::linear(c_); }
  std::string to_string(std::string_view var = "x") const { return to_poly().to_string(var); }

  friend bool operator==(const LinForm& a, const LinForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const LinForm& a, const LinForm& b) { return a.c_ < b.c_; }

 private:
  explicit LinForm(std::vector<Rat> c) : c_(std::move(c)) {}
  std::vector<Rat> c_;
};

/// Simple central arrangement: pairwise non-proportional hyperplanes through the origin.
class Arrangement {
 public:
  Arrangement() = default;
  /// Canonicalizes every normal. Throws ArrangementError on zero forms, wrong lengths,
  /// proportional duplicates, or a label count that does not match.
  Arrangement(std::size_t dim, const std::vector<std::vector<Rat>>& normals,
              std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<LinForm>& hyperplanes() const { return forms_; }
  const LinForm& operator[](std::size_t i) const { return forms_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Rank of the stacked normal vectors.
  std::size_t rank() const;
  /// A minus its h-th hyperplane.
  Arrangement deletion(std::size_t h) const;

 private:
  std::size_t dim_ = 0;
  std::vector<LinForm> forms_;
  std::vector<std::string> labels_;
};

/// Arrangement together with a positive multiplicity per hyperplane.
class Multiarrangement {
 public:
  Multiarrangement() = default;
  Multiarrangement(Arrangement base, std::vector<int> mult);

  static Multiarrangement simple(const Arrangement& arr);
  /// Accepts proportional duplicates and merges them by adding multiplicities
  /// (default multiplicity 1 per listed form).
  static Multiarrangement from_raw(std::size_t dim, const std::vector<std::vector<Rat>>& normals,
                                   const std::vector<int>& mult = {});

  const Arrangement& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }
  std::size_t size() const { return base_.size(); }
  const LinForm& operator[](std::size_t i) const { return base_[i]; }
  const std::vector<int>& multiplicities() const { return mult_; }
  int multiplicity(std::size_t i) const { return mult_.at(i); }
  /// |k| = sum of multiplicities.
  int total_multiplicity() const;
  bool is_simple() const;

 private:
  Arrangement base_;
  std::vector<int> mult_;
};

/// Q = prod alpha_H^{k_H}, homogeneous of degree |k|.
MultiPoly defining_poly(const Multiarrangement& ma);
MultiPoly defining_poly(const Arrangement& arr);

/// Affine hyperplane {x : normal . x = offset}.
struct AffineHyperplane {
  LinForm normal;
  Rat offset;
  friend bool operator==(const AffineHyperplane& a, const AffineHyperplane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

class AffineArrangement {
 public:
  AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes);
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<AffineHyperplane>& hyperplanes() const { return hyperplanes_; }

 private:
  std::size_t dim_;
  std::vector<AffineHyperplane> hyperplanes_;
};

/// Invertible linear change of coordinates y = T x.
class CoordinateChart {
 public:
  /// Throws SingularMatrix if T is not invertible.
  explicit CoordinateChart(RatMatrix forward);

  std::size_t dim() const { return forward_.rows(); }
  const RatMatrix& forward() const { return forward_; }
  const RatMatrix& inverse() const { return inverse_; }
  /// Coefficients of the form x -> alpha . x written in chart coordinates.
  std::vector<Rat> form_in_chart(std::span<const Rat> alpha) const;
  /// x_i expressed as linear polynomials in y.
  std::vector<MultiPoly> inverse_images() const;
  /// f(T^{-1} y).
  MultiPoly pull(const MultiPoly& f) const;

 private:
  RatMatrix forward_;
  RatMatrix inverse_;
};

/// Chart whose first coordinate is alpha; the others are the standard coordinates other
/// than alpha's pivot, in increasing order.
CoordinateChart chart_for(const LinForm& alpha);
CoordinateChart chart_for(const Arrangement& arr, std::size_t h);

/// Restriction of A minus H to the affine hyperplane alpha_H = s, in the chart coordinates
/// y_2, ..., y_l of H. Requires s != 0.
AffineArrangement affine_slice(const Arrangement& arr, std::size_t h, const Rat& s);

}  // namespace arrfree

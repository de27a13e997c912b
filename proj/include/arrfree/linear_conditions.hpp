#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/monomial_basis.hpp"
#include "arrfree/sparse_linalg.hpp"

namespace arrfree {

/// Unknowns of a graded piece: ncomp polynomial components of one degree, laid out
/// component-major in the monomial order of MonomialBasis.
struct PieceLayout {
  std::size_t nvars = 0;
  std::size_t ncomp = 0;
  int degree = 0;
  std::size_t block = 0;  // monomials per component
  std::size_t unknowns() const { return ncomp * block; }
  std::size_t column(std::size_t comp, std::size_t mono) const { return comp * block + mono; }
};

/// Linear system on the unknowns of a graded piece.
struct PieceSystem {
  PieceLayout layout;
  SparseSystem conditions;
};

/// Per-hyperplane chart data with cached powers of the pivot substitution.
class HyperplaneChart {
 public:
  explicit HyperplaneChart(const LinForm& alpha);

  std::size_t dim() const { return n_; }
  std::size_t pivot() const { return piv_; }
  /// Standard coordinates other than the pivot, in increasing order; chart variable r + 1
  /// is x_{others()[r]}.
  const std::vector<std::size_t>& others() const { return others_; }
  const CoordinateChart& chart() const { return chart_; }

  /// Terms c * y1^b * y'^e of the x-monomial m written in chart coordinates, restricted to
  /// b in [bmin, bmax]. y' is the exponent over the ell - 1 remaining chart variables.
  struct Term {
    int b;
    Exponent rest;
    Rat coeff;
  };
  std::vector<Term> image(const Exponent& m, int bmin, int bmax);

  /// Coefficient of dy_K in dx_I: the minor of the inverse chart matrix on rows I, columns K.
  const Rat& minor(std::size_t p, std::size_t i_index, std::size_t k_index);

 private:
  const MultiPoly& neg_tail_power(int e);

  std::size_t n_;
  std::size_t piv_;
  std::vector<std::size_t> others_;
  CoordinateChart chart_;
  MultiPoly neg_tail_;  // -(alpha - x_piv) in the ell - 1 remaining chart variables
  std::vector<MultiPoly> powers_;
  std::map<std::size_t, std::vector<Rat>> minors_;
};

/// Builds membership systems and restriction maps for one multiarrangement.
class ConditionBuilder {
 public:
  explicit ConditionBuilder(const Multiarrangement& ma);

  const Multiarrangement& arrangement() const { return ma_; }
  HyperplaneChart& chart(std::size_t h) { return *charts_.at(h); }

  /// Derivations of coefficient degree d with delta(alpha_H) divisible by alpha_H^{k_H}.
  PieceSystem derivations(int d);
  /// As derivations(d) with the extra rows delta(alpha_h) = 0.
  PieceSystem derivations_killing(std::size_t h, int d);
  /// p-form numerators eta of coefficient degree a with d alpha_H ^ eta divisible by
  /// alpha_H^{k_H} for every H.
  PieceSystem forms(int p, int a);

  /// Rows giving the coefficients of the restriction of a derivation killing alpha_h:
  /// delta(y_r) at y1 = 0 for the chart variables r >= 2 of hyperplane h.
  std::vector<SparseVec> derivation_restriction_rows(std::size_t h, int d);
  /// Rows giving the y1^{k_h} coefficient of every dy_K component (K avoiding dy1) of the
  /// numerator in the chart of h.
  std::vector<SparseVec> form_restriction_rows(std::size_t h, int p, int a);

 private:
  void append_derivation_rows(std::size_t h, const PieceLayout& lay, int bmin, int bmax,
                              std::vector<SparseVec>& out);
  void append_form_rows(std::size_t h, const PieceLayout& lay, int p, int bmin, int bmax,
                        std::vector<SparseVec>& out);

  Multiarrangement ma_;
  std::vector<std::unique_ptr<HyperplaneChart>> charts_;
  std::map<int, std::shared_ptr<MonomialBasis>> bases_;
  std::shared_ptr<MonomialBasis> basis(int d);
};

}  // namespace arrfree

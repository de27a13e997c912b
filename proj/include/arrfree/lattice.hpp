#pragma once

#include <cstddef>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/matrix.hpp"
#include "arrfree/unipoly.hpp"

namespace arrfree {

/// Intersection of hyperplanes, identified by the closed set of hyperplanes containing it.
struct Flat {
  std::vector<std::size_t> hyperplanes;  // sorted, closed
  RatMatrix normals;                     // reduced echelon basis of the annihilator
  std::size_t codim = 0;
};

class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& arr);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return by_codim_.empty() ? 0 : by_codim_.size() - 1; }
  /// Flats ordered by codimension, then by hyperplane set.
  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<long>& mobius() const { return mobius_; }
  const std::vector<std::size_t>& flats_of_codim(std::size_t c) const { return by_codim_.at(c); }
  /// X <= Y in reverse inclusion, i.e. hyperplanes(X) is a subset of hyperplanes(Y).
  bool leq(std::size_t x, std::size_t y) const;
  /// Index of the flat with this (closed) hyperplane set; throws std::out_of_range.
  std::size_t find(const std::vector<std::size_t>& hyperplanes) const;

 private:
  std::size_t dim_;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> by_codim_;
  std::vector<long> mobius_;
};

IntersectionLattice build_lattice(const Arrangement& arr);

/// sum over flats of mu(X) t^{dim X}.
UniPoly char_poly(const IntersectionLattice& lat);
UniPoly char_poly(const Arrangement& arr);
/// chi(A, t) / (t - 1); throws NotDivisible if the division is not exact and
/// std::invalid_argument for the empty arrangement.
UniPoly reduced_char_poly(const Arrangement& arr);

/// Nonempty intersection of affine hyperplanes.
struct AffineFlat {
  std::vector<std::size_t> hyperplanes;  // sorted, closed
  RatMatrix augmented;                   // reduced echelon [normals | offsets]
  std::size_t dim = 0;
};

class AffinePoset {
 public:
  explicit AffinePoset(const AffineArrangement& aff);
  const std::vector<AffineFlat>& flats() const { return flats_; }
  const std::vector<long>& mobius() const { return mobius_; }
  std::size_t ambient_dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<AffineFlat> flats_;
  std::vector<long> mobius_;
};

/// sum over nonempty intersections of mu(X) t^{dim X}.
UniPoly affine_char_poly(const AffineArrangement& aff);

}  // namespace arrfree

#pragma once

#include <stdexcept>
#include <string>

#include "arrfree/unipoly.hpp"

namespace arrfree {

/// Raised when a limit at x = 1 does not exist; carries the remaining pole order.
class PoleAtOne : public std::runtime_error {
 public:
  explicit PoleAtOne(int order)
      : std::runtime_error("pole of order " + std::to_string(order) + " at x = 1"), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

/// Univariate rational function, stored reduced with a monic denominator.
class RationalFunction1 {
 public:
  RationalFunction1(UniPoly numerator, UniPoly denominator);
  explicit RationalFunction1(UniPoly numerator) : RationalFunction1(std::move(numerator), UniPoly::constant(Rat(1))) {}

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  /// Value of the reduced function at x = 1; throws PoleAtOne otherwise.
  Rat limit_at_one() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

inline Rat uni_limit_at_one(const RationalFunction1& f) { return f.limit_at_one(); }

}  // namespace arrfree

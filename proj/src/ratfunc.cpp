#include "arrfree/ratfunc.hpp"

namespace arrfree {

RationalFunction1::RationalFunction1(UniPoly numerator, UniPoly denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("zero denominator");
  if (numerator.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly::constant(Rat(1));
    return;
  }
  UniPoly g = gcd(numerator, denominator);
  num_ = divmod(numerator, g).first;
  den_ = divmod(denominator, g).first;
  Rat lc = den_.leading();
  num_ *= Rat(1) / lc;
  den_ = den_.monic();
}

Rat RationalFunction1::limit_at_one() const {
  Rat d = den_.eval(Rat(1));
  if (!is_zero(d)) return num_.eval(Rat(1)) / d;
  throw PoleAtOne(den_.root_multiplicity(Rat(1)));
}

}  // namespace arrfree

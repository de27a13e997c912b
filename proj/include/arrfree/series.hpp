#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/ratfunc.hpp"
#include "arrfree/restriction.hpp"
#include "arrfree/unipoly.hpp"

namespace arrfree {

class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded dimensions on the window [lo, hi]; zero is assumed below lo.
struct HilbertFunction {
  int lo = 0;
  int hi = -1;
  std::vector<long> dims;

  long at(int d) const;
  int size() const { return hi - lo + 1; }
};

HilbertFunction hilbert_function(const std::function<long(int)>& dim_at, int lo, int hi);

enum class CokerSide { Derivations, Forms };

/// Cokernel dimensions of a restriction map on [lo, hi]; p is ignored for derivations.
HilbertFunction coker_dims(RestrictionWorkspace& ws, CokerSide side, int p, int lo, int hi);

/// x^shift * numerator(x) / (1 - x)^denominator_exponent.
struct RationalSeries {
  UniPoly numerator;
  int shift = 0;
  int denominator_exponent = 0;

  bool is_zero() const { return numerator.is_zero(); }
  /// Order of the pole at x = 1 after cancellation; -1 for the zero series.
  int pole_order() const;
  /// Taylor coefficient of x^n.
  Rat coefficient(int n) const;
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);
};

/// Applies (1 - x)^ell to the window; the last `stabilization` coefficients must vanish.
/// Throws NotStabilized otherwise.
RationalSeries fit_rational_series(const HilbertFunction& hf, int ell, int stabilization = 4);

struct FitOptions {
  int stabilization = 4;
  /// The window always reaches at least this degree before a fit is accepted.
  int min_top = 3;
  /// Windows are enlarged one degree at a time up to this degree.
  int max_top = 40;
};

/// Fits the series of dim_at on [lo, top], enlarging top until the fit stabilizes.
RationalSeries fit_growing(const std::function<long(int)>& dim_at, int lo, int ell, const FitOptions& opt,
                           HilbertFunction* used = nullptr);

/// Polynomial in y with coefficients RationalSeries in x: coefficient p is terms[p].
struct BivariateSeries {
  std::vector<RationalSeries> terms;
};

/// Substitutes y = t(1 - x) - 1 and lets x -> 1. Throws PoleAtOne if a limit diverges.
UniPoly char_via_limit(const BivariateSeries& s);

/// The series of each graded piece below use exponent d - p for p-forms of degree d, so that
/// dx_i carries degree 0.

/// Sum_p P(Omega^p(A), x) y^p.
BivariateSeries phi_series(LogModules& mods, const FitOptions& opt = {});
/// Sum_p P(M^p, x) y^p for the images of the form restriction maps.
BivariateSeries image_series(RestrictionWorkspace& ws, const FitOptions& opt = {});
/// Sum_p P(C^p, x) y^p.
BivariateSeries coker_series(RestrictionWorkspace& ws, const FitOptions& opt = {});
/// Sum_p P(Omega^p(A^H), x) y^p.
BivariateSeries restricted_phi_series(RestrictionWorkspace& ws, const FitOptions& opt = {});

struct Eq33Result {
  bool holds = false;
  int lo = 0;
  int top = 0;
  std::vector<std::string> mismatches;
};

/// Coefficientwise check of x (1 - x) Phi(A, x, y) = (x + y) P(M, x, y) for x-exponents in
/// [-m, top].
Eq33Result verify_eq33(RestrictionWorkspace& ws, int top = 12);

struct Eq37Result {
  bool holds = false;
  UniPoly lhs;  // chi(A^H, t) - chi0(A, t)
  UniPoly rhs;  // limit of P(C, x, t(1 - x) - 1)
};

/// chi(A^H) is taken from the product over the exponents of a free A^H and otherwise from the
/// limit of the fitted series of Omega(A^H).
Eq37Result verify_eq37(RestrictionWorkspace& ws, const FitOptions& opt = {});

/// prod (t - e).
UniPoly product_of_roots(const std::vector<int>& roots);

}  // namespace arrfree

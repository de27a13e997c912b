#include "arrfree/series.hpp"

#include <algorithm>

#include "arrfree/lattice.hpp"
#include "arrfree/monomial_basis.hpp"

namespace arrfree {

namespace {

UniPoly one_minus_x_pow(int e) { return UniPoly({Rat(1), Rat(-1)}).pow(static_cast<unsigned>(std::max(e, 0))); }

/// Binomial coefficient C(n + e - 1, e - 1): coefficient of x^n in 1/(1 - x)^e.
Rat neg_binomial(int n, int e) {
  if (n < 0) return Rat(0);
  if (e == 0) return Rat(n == 0 ? 1 : 0);
  return Rat(static_cast<unsigned long>(binomial(static_cast<std::size_t>(n + e - 1), static_cast<std::size_t>(e - 1))));
}

RationalSeries normalized(UniPoly num, int shift, int e) {
  RationalSeries s;
  if (num.is_zero()) return s;
  int low = 0;
  while (is_zero(num.coeff(low))) ++low;
  if (low > 0) {
    std::vector<Rat> c(num.coeffs().begin() + low, num.coeffs().end());
    num = UniPoly(std::move(c));
    shift += low;
  }
  s.numerator = std::move(num);
  s.shift = shift;
  s.denominator_exponent = e;
  return s;
}

BivariateSeries fit_family(int count, const std::function<long(int, int)>& dim_at,
                           const std::function<int(int)>& lo_of, int ell, const FitOptions& opt) {
  BivariateSeries out;
  for (int p = 0; p < count; ++p) {
    FitOptions o = opt;
    o.min_top = opt.min_top + p;
    o.max_top = opt.max_top + p;
    RationalSeries s = fit_growing([&](int d) { return dim_at(p, d); }, lo_of(p), ell, o);
    if (!s.is_zero()) s.shift -= p;
    out.terms.push_back(std::move(s));
  }
  return out;
}

}  // namespace

long HilbertFunction::at(int d) const {
  if (d < lo) return 0;
  if (d > hi) throw std::out_of_range("degree outside the Hilbert function window");
  return dims[static_cast<std::size_t>(d - lo)];
}

HilbertFunction hilbert_function(const std::function<long(int)>& dim_at, int lo, int hi) {
  HilbertFunction hf{lo, hi, {}};
  for (int d = lo; d <= hi; ++d) hf.dims.push_back(dim_at(d));
  return hf;
}

HilbertFunction coker_dims(RestrictionWorkspace& ws, CokerSide side, int p, int lo, int hi) {
  if (side == CokerSide::Derivations)
    return hilbert_function([&](int d) { return static_cast<long>(ws.coker_der_dim(d)); }, lo, hi);
  return hilbert_function([&](int d) { return static_cast<long>(ws.coker_form_dim(p, d)); }, lo, hi);
}

int RationalSeries::pole_order() const {
  if (is_zero()) return -1;
  int r = numerator.root_multiplicity(Rat(1));
  return std::max(denominator_exponent - r, 0);
}

Rat RationalSeries::coefficient(int n) const {
  Rat c(0);
  for (int i = 0; i <= numerator.degree(); ++i) {
    if (!arrfree::is_zero(numerator.coeff(i))) c += numerator.coeff(i) * neg_binomial(n - shift - i, denominator_exponent);
  }
  return c;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  int s = std::min(a.shift, b.shift);
  UniPoly la = UniPoly::monomial(a.shift - s) * a.numerator * one_minus_x_pow(b.denominator_exponent);
  UniPoly lb = UniPoly::monomial(b.shift - s) * b.numerator * one_minus_x_pow(a.denominator_exponent);
  return la == lb;
}

RationalSeries fit_rational_series(const HilbertFunction& hf, int ell, int stabilization) {
  int n = hf.size();
  if (n < stabilization || stabilization < 1) throw NotStabilized("window shorter than the stabilization length");
  std::vector<Rat> c;
  for (long v : hf.dims) c.emplace_back(v);
  UniPoly window(c);
  UniPoly prod = window * one_minus_x_pow(ell);
  for (int j = n - stabilization; j < n; ++j) {
    if (!is_zero(prod.coeff(j)))
      throw NotStabilized("finite differences do not vanish at the top of [" + std::to_string(hf.lo) + ", " +
                          std::to_string(hf.hi) + "]");
  }
  std::vector<Rat> num;
  for (int j = 0; j < n - stabilization; ++j) num.push_back(prod.coeff(j));
  RationalSeries s = normalized(UniPoly(num), hf.lo, ell);
  for (int d = hf.lo; d <= hf.hi; ++d) {
    if (s.coefficient(d) != Rat(hf.at(d))) throw NotStabilized("fitted series does not reproduce the window");
  }
  return s;
}

RationalSeries fit_growing(const std::function<long(int)>& dim_at, int lo, int ell, const FitOptions& opt,
                           HilbertFunction* used) {
  int top = std::max(opt.min_top, lo + opt.stabilization - 1);
  HilbertFunction hf = hilbert_function(dim_at, lo, top);
  while (true) {
    try {
      RationalSeries s = fit_rational_series(hf, ell, opt.stabilization);
      if (used) *used = hf;
      return s;
    } catch (const NotStabilized&) {
      if (hf.hi >= opt.max_top) throw;
    }
    hf.hi += 1;
    hf.dims.push_back(dim_at(hf.hi));
  }
}

UniPoly char_via_limit(const BivariateSeries& s) {
  int n = 0;
  int smin = 0;
  bool any = false;
  for (const auto& t : s.terms) {
    if (t.is_zero()) continue;
    n = std::max(n, t.denominator_exponent);
    smin = any ? std::min(smin, t.shift) : t.shift;
    any = true;
  }
  UniPoly result;
  if (!any) return result;
  int top = static_cast<int>(s.terms.size()) - 1;
  UniPoly den = one_minus_x_pow(n);
  for (int r = 0; r <= top; ++r) {
    UniPoly f;
    for (int p = r; p <= top; ++p) {
      const RationalSeries& t = s.terms[static_cast<std::size_t>(p)];
      if (t.is_zero()) continue;
      Rat c(static_cast<unsigned long>(binomial(static_cast<std::size_t>(p), static_cast<std::size_t>(r))));
      if ((p - r) % 2 != 0) c = -c;
      f += UniPoly::monomial(t.shift - smin) * t.numerator * one_minus_x_pow(r + n - t.denominator_exponent) * c;
    }
    Rat v = uni_limit_at_one(RationalFunction1(f, den));
    result += UniPoly::monomial(r, v);
  }
  return result;
}

BivariateSeries phi_series(LogModules& mods, const FitOptions& opt) {
  int l = static_cast<int>(mods.arrangement().dim());
  int k = mods.arrangement().total_multiplicity();
  return fit_family(
      l + 1, [&](int p, int d) { return static_cast<long>(mods.omega_dim(p, d)); },
      [&](int p) { return p - k; }, l, opt);
}

BivariateSeries image_series(RestrictionWorkspace& ws, const FitOptions& opt) {
  int l = static_cast<int>(ws.data().parent.dim());
  int m = static_cast<int>(ws.data().parent.size());
  return fit_family(
      l, [&](int p, int d) { return static_cast<long>(ws.image_form_dim(p, d)); }, [&](int p) { return p - m; },
      l - 1, opt);
}

BivariateSeries coker_series(RestrictionWorkspace& ws, const FitOptions& opt) {
  int l = static_cast<int>(ws.data().parent.dim());
  int m = static_cast<int>(ws.data().parent.size());
  return fit_family(
      l, [&](int p, int d) { return static_cast<long>(ws.coker_form_dim(p, d)); }, [&](int p) { return p - m; },
      l - 1, opt);
}

BivariateSeries restricted_phi_series(RestrictionWorkspace& ws, const FitOptions& opt) {
  return phi_series(ws.restricted(), opt);
}

Eq33Result verify_eq33(RestrictionWorkspace& ws, int top) {
  int l = static_cast<int>(ws.data().parent.dim());
  int m = static_cast<int>(ws.data().parent.size());
  auto phi = [&](int p, int j) { return static_cast<long>(ws.parent().omega_dim(p, j + p)); };
  auto mu = [&](int p, int j) -> long {
    if (p < 0 || p >= l) return 0;
    return static_cast<long>(ws.image_form_dim(p, j + p));
  };
  Eq33Result res;
  res.lo = -m;
  res.top = top;
  for (int p = 0; p <= l; ++p) {
    for (int n = -m; n <= top; ++n) {
      long lhs = phi(p, n - 1) - phi(p, n - 2);
      long rhs = mu(p, n - 1) + mu(p - 1, n);
      if (lhs != rhs)
        res.mismatches.push_back("y^" + std::to_string(p) + " x^" + std::to_string(n) + ": " + std::to_string(lhs) +
                                 " != " + std::to_string(rhs));
    }
  }
  res.holds = res.mismatches.empty();
  return res;
}

UniPoly product_of_roots(const std::vector<int>& roots) { return UniPoly::from_roots(roots); }

Eq37Result verify_eq37(RestrictionWorkspace& ws, const FitOptions& opt) {
  FreenessCertificate cert = freeness_der(ws.data().restricted);
  UniPoly chi_h = cert.free ? product_of_roots(cert.exponents) : char_via_limit(restricted_phi_series(ws, opt));
  Eq37Result res;
  res.lhs = chi_h - reduced_char_poly(ws.data().parent);
  res.rhs = char_via_limit(coker_series(ws, opt));
  res.holds = res.lhs == res.rhs;
  return res;
}

}  // namespace arrfree

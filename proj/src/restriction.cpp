#include "arrfree/restriction.hpp"

#include <algorithm>

#include "arrfree/modular.hpp"
#include "arrfree/monomial_basis.hpp"

namespace arrfree {

namespace {

std::vector<Rat> restricted_form(const CoordinateChart& chart, const LinForm& alpha) {
  std::vector<Rat> beta = chart.form_in_chart(alpha.coeffs());
  return std::vector<Rat>(beta.begin() + 1, beta.end());
}

/// Components of a p-form numerator in chart coordinates, indexed by p-subsets of chart variables.
std::vector<MultiPoly> to_chart(const CoordinateChart& chart, int p, const std::vector<MultiPoly>& eta) {
  std::size_t n = chart.dim();
  auto subs = subsets(n, static_cast<std::size_t>(p));
  auto images = chart.inverse_images();
  std::vector<MultiPoly> pulled;
  for (const auto& f : eta) pulled.push_back(f.substitute(images));
  std::vector<MultiPoly> out(subs.size(), MultiPoly(n));
  const RatMatrix& tinv = chart.inverse();
  for (std::size_t k = 0; k < subs.size(); ++k) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (pulled[i].is_zero()) continue;
      RatMatrix sub(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
      for (std::size_t r = 0; r < sub.rows(); ++r)
        for (std::size_t c = 0; c < sub.cols(); ++c) sub.at(r, c) = tinv.at(subs[i][r], subs[k][c]);
      Rat m = p == 0 ? Rat(1) : sub.determinant();
      if (!is_zero(m)) out[k] += pulled[i] * m;
    }
  }
  return out;
}

}  // namespace

RestrictionData ziegler_restriction(const Arrangement& arr, std::size_t h) {
  if (arr.dim() < 2) throw std::invalid_argument("restriction needs l >= 2");
  if (h >= arr.size()) throw std::out_of_range("hyperplane index out of range");
  CoordinateChart chart = chart_for(arr, h);
  std::vector<std::vector<Rat>> raw;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i == h) continue;
    raw.push_back(restricted_form(chart, arr[i]));
    source.push_back(i);
  }
  Multiarrangement restricted = Multiarrangement::from_raw(arr.dim() - 1, raw);
  std::vector<long> index_map(arr.size(), -1);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    LinForm f = LinForm::canonical(raw[j]);
    const auto& hs = restricted.base().hyperplanes();
    index_map[source[j]] = std::find(hs.begin(), hs.end(), f) - hs.begin();
  }
  RestrictionData rd{arr, h, chart, restricted, index_map, Rat(1)};
  MultiPoly direct = restricted_quotient(rd);
  MultiPoly canonical = defining_poly(restricted);
  rd.scale = direct.leading_coefficient() / canonical.leading_coefficient();
  return rd;
}

MultiPoly restricted_quotient(const RestrictionData& rd) {
  MultiPoly q = defining_poly(rd.parent.deletion(rd.h));
  return rd.chart.pull(q).restrict_to_zero(0);
}

Derivation res_der(const RestrictionData& rd, const Derivation& delta) {
  MultiPoly alpha = rd.parent[rd.h].to_poly();
  if (!delta.apply(alpha).is_zero()) throw NotInDH("derivation does not kill alpha_H");
  std::size_t n = rd.parent.dim();
  auto images = rd.chart.inverse_images();
  Derivation out;
  out.degree = delta.degree;
  for (std::size_t k = 1; k < n; ++k) {
    MultiPoly g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rat& t = rd.chart.forward().at(k, i);
      if (!is_zero(t)) g += delta.coeffs[i] * t;
    }
    out.coeffs.push_back(g.substitute(images).restrict_to_zero(0));
  }
  return out;
}

LogForm res_form(const RestrictionData& rd, const LogForm& omega) {
  Multiarrangement ma = Multiarrangement::simple(rd.parent);
  if (!is_logarithmic(ma, omega)) throw NotLogarithmic("form is not logarithmic");
  std::size_t n = rd.parent.dim();
  MultiPoly q = defining_poly(ma);
  std::vector<MultiPoly> eta;
  for (const auto& f : omega.numerator) eta.push_back(poly_divexact(q * f, omega.denominator));
  auto chart_eta = to_chart(rd.chart, omega.p, eta);
  auto subs = subsets(n, static_cast<std::size_t>(omega.p));
  LogForm out;
  out.nvars = n - 1;
  out.p = omega.p;
  out.denominator = defining_poly(rd.restricted);
  out.degree = omega.degree;
  Rat inv = Rat(1) / rd.scale;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k].empty() && subs[k][0] == 0) continue;
    const MultiPoly& psi = chart_eta[k];
    if (!psi.slice(0, 0).is_zero()) throw DivisibilityViolated("component not divisible by alpha_H");
    MultiPoly top = psi.slice(0, 1);
    MultiPoly reduced(n);
    for (const auto& [e, c] : top.terms()) {
      Exponent f = e;
      f[0] -= 1;
      reduced.add_term(f, c);
    }
    out.numerator.push_back(reduced.restrict_to_zero(0) * inv);
  }
  return out;
}

RestrictionWorkspace::RestrictionWorkspace(const Arrangement& arr, std::size_t h)
    : rd_(ziegler_restriction(arr, h)),
      parent_(std::make_unique<LogModules>(Multiarrangement::simple(arr))),
      restricted_(std::make_unique<LogModules>(rd_.restricted)) {}

std::size_t RestrictionWorkspace::image_der_dim(int d) {
  if (d < 0) return 0;
  auto it = image_der_.find(d);
  if (it != image_der_.end()) return it->second;
  ConditionBuilder& b = parent_->builder();
  PieceSystem sys = b.derivations_killing(rd_.h, d);
  ModEchelon ech(sys.layout.unknowns());
  for (const auto& r : sys.conditions.rows) ech.add(r);
  std::size_t base = ech.rank();
  for (const auto& r : b.derivation_restriction_rows(rd_.h, d)) ech.add(r);
  return image_der_[d] = ech.rank() - base;
}

std::size_t RestrictionWorkspace::coker_der_dim(int d) { return restricted_->der_dim(d) - image_der_dim(d); }

std::size_t RestrictionWorkspace::image_form_dim(int p, int d) {
  int a = parent_->numerator_degree(p, d);
  if (a < 0 || p < 0 || static_cast<std::size_t>(p) >= rd_.parent.dim()) return 0;
  auto key = std::make_pair(p, d);
  auto it = image_form_.find(key);
  if (it != image_form_.end()) return it->second;
  ConditionBuilder& b = parent_->builder();
  PieceSystem sys = b.forms(p, a);
  ModEchelon ech(sys.layout.unknowns());
  auto& rows = sys.conditions.rows;
  std::stable_sort(rows.begin(), rows.end(), [](const SparseVec& x, const SparseVec& y) { return x.size() < y.size(); });
  for (const auto& r : rows) ech.add(r);
  std::size_t base = ech.rank();
  for (const auto& r : b.form_restriction_rows(rd_.h, p, a)) ech.add(r);
  return image_form_[key] = ech.rank() - base;
}

std::size_t RestrictionWorkspace::coker_form_dim(int p, int d) {
  return restricted_->omega_dim(p, d) - image_form_dim(p, d);
}

Prop13Result prop13_check(RestrictionWorkspace& ws, int lo, int hi) {
  const Arrangement& arr = ws.data().parent;
  if (arr.dim() < 3) throw std::invalid_argument("shift comparison needs l >= 3");
  int q = static_cast<int>(arr.dim()) - 2;
  Prop13Result res;
  res.lo = lo;
  res.hi = hi;
  res.predicted = static_cast<int>(arr.size()) - static_cast<int>(arr.dim()) + 1;
  for (int d = lo; d <= hi; ++d) {
    res.der_side.push_back(ws.coker_der_dim(d));
    res.form_side.push_back(ws.coker_form_dim(q, d));
  }
  auto first_nz = [](const std::vector<std::size_t>& v) {
    auto it = std::find_if(v.begin(), v.end(), [](std::size_t x) { return x != 0; });
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  };
  int fd = first_nz(res.der_side);
  int ff = first_nz(res.form_side);
  if (fd < 0 && ff < 0) throw WindowTooSmall("both cokernels vanish on the window");
  if (fd < 0 || ff < 0) return res;
  int s = fd - ff;
  res.offset = s;
  int n = hi - lo + 1;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    int j = i + s;
    bool j_in = j >= 0 && j < n;
    if (j_in) {
      ok = res.der_side[j] == res.form_side[i];
    } else if (res.form_side[i] != 0) {
      ok = false;  // a nonzero value whose partner lies outside the window
    }
  }
  for (int j = 0; j < n && ok; ++j) {
    int i = j - s;
    if ((i < 0 || i >= n) && res.der_side[j] != 0) ok = false;
  }
  res.ok = ok;
  return res;
}

bool c1_vanishing_certified(RestrictionWorkspace& ws, const FreenessCertificate& cert) {
  if (!cert.free) throw RestrictionNotFree("restricted multiarrangement is not free");
  int lo = 1 - *std::max_element(cert.exponents.begin(), cert.exponents.end());
  int hi = 1 - *std::min_element(cert.exponents.begin(), cert.exponents.end());
  for (int d = lo; d <= hi; ++d) {
    if (ws.coker_form_dim(1, d) != 0) return false;
  }
  return true;
}

bool c1_vanishing_certified(RestrictionWorkspace& ws) {
  return c1_vanishing_certified(ws, freeness_der(ws.data().restricted));
}

}  // namespace arrfree

#include "arrfree/arrangement.hpp"

#include <algorithm>
#include <map>

namespace arrfree {

LinForm LinForm::canonical(std::vector<Rat> coeffs) {
  auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rat& q) { return !is_zero(q); });
  if (it == coeffs.end()) throw ArrangementError("zero linear form");
  Rat lead = *it;
  for (auto& q : coeffs) q /= lead;
  return LinForm(std::move(coeffs));
}

std::size_t LinForm::pivot() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!is_zero(c_[i])) return i;
  }
  throw std::logic_error("zero linear form");
}

Arrangement::Arrangement(std::size_t dim, const std::vector<std::vector<Rat>>& normals,
                         std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim == 0) throw ArrangementError("ambient dimension must be positive");
  if (!labels_.empty() && labels_.size() != normals.size())
    throw ArrangementError("label count does not match hyperplane count");
  for (const auto& n : normals) {
    if (n.size() != dim) throw ArrangementError("linear form has wrong length");
    LinForm f = LinForm::canonical(n);
    if (std::find(forms_.begin(), forms_.end(), f) != forms_.end())
      throw ArrangementError("proportional duplicate hyperplane " + f.to_string());
    forms_.push_back(std::move(f));
  }
}

std::size_t Arrangement::rank() const {
  if (forms_.empty()) return 0;
  RatMatrix m(forms_.size(), dim_);
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = forms_[i][j];
  return m.rank();
}

Arrangement Arrangement::deletion(std::size_t h) const {
  Arrangement out;
  out.dim_ = dim_;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i == h) continue;
    out.forms_.push_back(forms_[i]);
    if (!labels_.empty()) out.labels_.push_back(labels_[i]);
  }
  return out;
}

Multiarrangement::Multiarrangement(Arrangement base, std::vector<int> mult)
    : base_(std::move(base)), mult_(std::move(mult)) {
  if (mult_.size() != base_.size()) throw ArrangementError("multiplicity count does not match hyperplane count");
  for (int k : mult_) {
    if (k < 1) throw ArrangementError("multiplicities must be positive");
  }
}

Multiarrangement Multiarrangement::simple(const Arrangement& arr) {
  return Multiarrangement(arr, std::vector<int>(arr.size(), 1));
}

Multiarrangement Multiarrangement::from_raw(std::size_t dim, const std::vector<std::vector<Rat>>& normals,
                                            const std::vector<int>& mult) {
  if (!mult.empty() && mult.size() != normals.size())
    throw ArrangementError("multiplicity count does not match hyperplane count");
  std::vector<std::vector<Rat>> distinct;
  std::vector<int> merged;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != dim) throw ArrangementError("linear form has wrong length");
    int k = mult.empty() ? 1 : mult[i];
    if (k < 1) throw ArrangementError("multiplicities must be positive");
    LinForm f = LinForm::canonical(normals[i]);
    auto it = std::find(distinct.begin(), distinct.end(), f.coeffs());
    if (it == distinct.end()) {
      distinct.push_back(f.coeffs());
      merged.push_back(k);
    } else {
      merged[it - distinct.begin()] += k;
    }
  }
  return Multiarrangement(Arrangement(dim, distinct), std::move(merged));
}

int Multiarrangement::total_multiplicity() const {
  int s = 0;
  for (int k : mult_) s += k;
  return s;
}

bool Multiarrangement::is_simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int k) { return k == 1; });
}

MultiPoly defining_poly(const Multiarrangement& ma) {
  MultiPoly q = MultiPoly::constant(ma.dim(), Rat(1));
  for (std::size_t i = 0; i < ma.size(); ++i) q *= ma[i].to_poly().pow(ma.multiplicity(i));
  return q;
}

MultiPoly defining_poly(const Arrangement& arr) { return defining_poly(Multiarrangement::simple(arr)); }

AffineArrangement::AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes)
    : dim_(dim) {
  for (auto& h : hyperplanes) {
    if (h.normal.dim() != dim) throw ArrangementError("affine form has wrong length");
    // Normal is canonical already; the offset scales with it, so equal pairs mean equal sets.
    if (std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end())
      throw ArrangementError("repeated affine hyperplane");
    hyperplanes_.push_back(std::move(h));
  }
}

CoordinateChart::CoordinateChart(RatMatrix forward) : forward_(std::move(forward)), inverse_(forward_.inverse()) {}

std::vector<Rat> CoordinateChart::form_in_chart(std::span<const Rat> alpha) const {
  std::size_t n = dim();
  if (alpha.size() != n) throw std::invalid_argument("form length mismatch");
  std::vector<Rat> beta(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) beta[k] += alpha[i] * inverse_.at(i, k);
  return beta;
}

std::vector<MultiPoly> CoordinateChart::inverse_images() const {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < dim(); ++i) images.push_back(MultiPoly::linear(inverse_.row(i)));
  return images;
}

MultiPoly CoordinateChart::pull(const MultiPoly& f) const {
  auto images = inverse_images();
  return f.substitute(images);
}

CoordinateChart chart_for(const LinForm& alpha) {
  std::size_t n = alpha.dim();
  std::size_t piv = alpha.pivot();
  RatMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) t.at(0, j) = alpha[j];
  std::size_t row = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == piv) continue;
    t.at(row++, i) = 1;
  }
  return CoordinateChart(std::move(t));
}

CoordinateChart chart_for(const Arrangement& arr, std::size_t h) { return chart_for(arr[h]); }

AffineArrangement affine_slice(const Arrangement& arr, std::size_t h, const Rat& s) {
  if (is_zero(s)) throw std::invalid_argument("affine_slice requires s != 0");
  CoordinateChart chart = chart_for(arr, h);
  std::size_t n = arr.dim();
  std::vector<AffineHyperplane> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i == h) continue;
    std::vector<Rat> beta = chart.form_in_chart(arr[i].coeffs());
    // beta_0 * s + sum_{k >= 1} beta_k y_k = 0
    std::vector<Rat> rest(beta.begin() + 1, beta.end());
    Rat offset = -beta[0] * s;
    auto lead = std::find_if(rest.begin(), rest.end(), [](const Rat& q) { return !is_zero(q); });
    Rat scale = *lead;
    offset /= scale;
    out.push_back({LinForm::canonical(std::move(rest)), offset});
    (void)n;
  }
  return AffineArrangement(n - 1, std::move(out));
}

}  // namespace arrfree

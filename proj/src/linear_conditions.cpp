#include "arrfree/linear_conditions.hpp"

#include <unordered_map>

#include "arrfree/matrix.hpp"

namespace arrfree {

namespace {

struct RowKey {
  std::uint64_t rest;
  std::uint64_t tag;
  friend bool operator==(const RowKey& a, const RowKey& b) { return a.rest == b.rest && a.tag == b.tag; }
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const {
    return std::hash<std::uint64_t>()(k.rest * 0x9E3779B97F4A7C15ULL ^ k.tag);
  }
};

/// Collects sparse rows addressed by key; columns must be visited in increasing order.
class RowCollector {
 public:
  void add(const RowKey& key, std::size_t col, const Rat& value) {
    auto [it, fresh] = index_.try_emplace(key, rows_.size());
    if (fresh) rows_.emplace_back();
    rows_[it->second].emplace_back(col, value);
  }
  void move_into(std::vector<SparseVec>& out) {
    for (auto& r : rows_) out.push_back(std::move(r));
    rows_.clear();
    index_.clear();
  }

 private:
  std::unordered_map<RowKey, std::size_t, RowKeyHash> index_;
  std::vector<SparseVec> rows_;
};

}  // namespace

HyperplaneChart::HyperplaneChart(const LinForm& alpha)
    : n_(alpha.dim()), piv_(alpha.pivot()), chart_(chart_for(alpha)), neg_tail_(alpha.dim() - 1) {
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != piv_) others_.push_back(j);
  }
  for (std::size_t r = 0; r < others_.size(); ++r) {
    const Rat& c = alpha[others_[r]];
    if (is_zero(c)) continue;
    Exponent e(n_ - 1, 0);
    e[r] = 1;
    neg_tail_.add_term(e, -c);
  }
  powers_.push_back(MultiPoly::constant(n_ - 1, Rat(1)));
}

const MultiPoly& HyperplaneChart::neg_tail_power(int e) {
  while (static_cast<int>(powers_.size()) <= e) powers_.push_back(powers_.back() * neg_tail_);
  return powers_[static_cast<std::size_t>(e)];
}

std::vector<HyperplaneChart::Term> HyperplaneChart::image(const Exponent& m, int bmin, int bmax) {
  std::vector<Term> out;
  int e = m[piv_];
  Exponent base(n_ - 1);
  for (std::size_t r = 0; r < others_.size(); ++r) base[r] = m[others_[r]];
  for (int b = std::max(bmin, 0); b <= std::min(bmax, e); ++b) {
    Rat binom(static_cast<unsigned long>(binomial(static_cast<std::size_t>(e), static_cast<std::size_t>(b))));
    for (const auto& [ex, c] : neg_tail_power(e - b).terms()) {
      Exponent rest = base;
      for (std::size_t r = 0; r < rest.size(); ++r) rest[r] += ex[r];
      out.push_back({b, std::move(rest), binom * c});
    }
  }
  return out;
}

const Rat& HyperplaneChart::minor(std::size_t p, std::size_t i_index, std::size_t k_index) {
  auto it = minors_.find(p);
  if (it == minors_.end()) {
    auto subs = subsets(n_, p);
    std::vector<Rat> table(subs.size() * subs.size());
    const RatMatrix& tinv = chart_.inverse();
    for (std::size_t a = 0; a < subs.size(); ++a) {
      for (std::size_t b = 0; b < subs.size(); ++b) {
        RatMatrix sub(p, p);
        for (std::size_t r = 0; r < p; ++r)
          for (std::size_t c = 0; c < p; ++c) sub.at(r, c) = tinv.at(subs[a][r], subs[b][c]);
        table[a * subs.size() + b] = p == 0 ? Rat(1) : sub.determinant();
      }
    }
    it = minors_.emplace(p, std::move(table)).first;
  }
  std::size_t count = binomial(n_, p);
  return it->second[i_index * count + k_index];
}

ConditionBuilder::ConditionBuilder(const Multiarrangement& ma) : ma_(ma) {
  for (std::size_t h = 0; h < ma_.size(); ++h) charts_.push_back(std::make_unique<HyperplaneChart>(ma_[h]));
}

std::shared_ptr<MonomialBasis> ConditionBuilder::basis(int d) {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  auto b = std::make_shared<MonomialBasis>(ma_.dim(), d);
  bases_[d] = b;
  return b;
}

void ConditionBuilder::append_derivation_rows(std::size_t h, const PieceLayout& lay, int bmin, int bmax,
                                              std::vector<SparseVec>& out) {
  auto mb = basis(lay.degree);
  HyperplaneChart& ch = chart(h);
  const LinForm& alpha = ma_[h];
  RowCollector rows;
  for (std::size_t i = 0; i < lay.ncomp; ++i) {
    if (is_zero(alpha[i])) continue;
    for (std::size_t m = 0; m < mb->size(); ++m) {
      for (auto& t : ch.image((*mb)[m], bmin, bmax))
        rows.add({MonomialBasis::pack(t.rest), static_cast<std::uint64_t>(t.b)}, lay.column(i, m), alpha[i] * t.coeff);
    }
  }
  rows.move_into(out);
}

void ConditionBuilder::append_form_rows(std::size_t h, const PieceLayout& lay, int p, int bmin, int bmax,
                                        std::vector<SparseVec>& out) {
  auto mb = basis(lay.degree);
  HyperplaneChart& ch = chart(h);
  auto subs = subsets(ma_.dim(), static_cast<std::size_t>(p));
  std::vector<std::size_t> avoid;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (subs[k].empty() || subs[k][0] != 0) avoid.push_back(k);
  }
  RowCollector rows;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<std::pair<std::size_t, Rat>> coeffs;
    for (std::size_t k : avoid) {
      const Rat& c = ch.minor(static_cast<std::size_t>(p), i, k);
      if (!is_zero(c)) coeffs.emplace_back(k, c);
    }
    if (coeffs.empty()) continue;
    for (std::size_t m = 0; m < mb->size(); ++m) {
      auto img = ch.image((*mb)[m], bmin, bmax);
      for (const auto& [k, c] : coeffs) {
        for (const auto& t : img) {
          std::uint64_t tag = (static_cast<std::uint64_t>(k) << 16) | static_cast<std::uint64_t>(t.b);
          rows.add({MonomialBasis::pack(t.rest), tag}, lay.column(i, m), c * t.coeff);
        }
      }
    }
  }
  rows.move_into(out);
}

PieceSystem ConditionBuilder::derivations(int d) {
  PieceSystem sys;
  sys.layout = {ma_.dim(), ma_.dim(), d, count_monomials(ma_.dim(), d)};
  sys.conditions.cols = sys.layout.unknowns();
  if (d < 0) return sys;
  for (std::size_t h = 0; h < ma_.size(); ++h)
    append_derivation_rows(h, sys.layout, 0, ma_.multiplicity(h) - 1, sys.conditions.rows);
  return sys;
}

PieceSystem ConditionBuilder::derivations_killing(std::size_t h, int d) {
  PieceSystem sys = derivations(d);
  if (d < 0) return sys;
  auto mb = basis(d);
  const LinForm& alpha = ma_[h];
  for (std::size_t m = 0; m < mb->size(); ++m) {
    SparseVec row;
    for (std::size_t i = 0; i < ma_.dim(); ++i) {
      if (!is_zero(alpha[i])) row.emplace_back(sys.layout.column(i, m), alpha[i]);
    }
    sys.conditions.rows.push_back(std::move(row));
  }
  return sys;
}

PieceSystem ConditionBuilder::forms(int p, int a) {
  PieceSystem sys;
  std::size_t n = ma_.dim();
  sys.layout = {n, binomial(n, static_cast<std::size_t>(p)), a, count_monomials(n, a)};
  sys.conditions.cols = sys.layout.unknowns();
  if (a < 0 || p < 0 || static_cast<std::size_t>(p) > n) return sys;
  for (std::size_t h = 0; h < ma_.size(); ++h)
    append_form_rows(h, sys.layout, p, 0, ma_.multiplicity(h) - 1, sys.conditions.rows);
  return sys;
}

std::vector<SparseVec> ConditionBuilder::derivation_restriction_rows(std::size_t h, int d) {
  std::vector<SparseVec> out;
  if (d < 0) return out;
  auto mb = basis(d);
  PieceLayout lay{ma_.dim(), ma_.dim(), d, mb->size()};
  HyperplaneChart& ch = chart(h);
  RowCollector rows;
  for (std::size_t r = 0; r < ch.others().size(); ++r) {
    std::size_t i = ch.others()[r];
    for (std::size_t m = 0; m < mb->size(); ++m) {
      for (auto& t : ch.image((*mb)[m], 0, 0))
        rows.add({MonomialBasis::pack(t.rest), static_cast<std::uint64_t>(r)}, lay.column(i, m), t.coeff);
    }
  }
  rows.move_into(out);
  return out;
}

std::vector<SparseVec> ConditionBuilder::form_restriction_rows(std::size_t h, int p, int a) {
  std::vector<SparseVec> out;
  std::size_t n = ma_.dim();
  if (a < 0 || p < 0 || static_cast<std::size_t>(p) > n) return out;
  PieceLayout lay{n, binomial(n, static_cast<std::size_t>(p)), a, count_monomials(n, a)};
  int k = ma_.multiplicity(h);
  append_form_rows(h, lay, p, k, k, out);
  return out;
}

}  // namespace arrfree

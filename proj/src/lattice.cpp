#include "arrfree/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arrfree/multipoly.hpp"

namespace arrfree {

namespace {

/// True iff v lies in the row space of the reduced echelon matrix e.
bool in_span(const RrefResult& e, std::span<const Rat> v) {
  std::vector<Rat> w(v.begin(), v.end());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Rat f = w[e.pivots[r]];
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * e.matrix.at(r, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Rat& q) { return is_zero(q); });
}

RatMatrix stack(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  return RatMatrix::from_rows(rows, cols);
}

RatMatrix leading_rows(const RrefResult& r) {
  RatMatrix out(r.pivots.size(), r.matrix.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) out.at(i, j) = r.matrix.at(i, j);
  return out;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class F>
std::vector<long> mobius_by_inclusion(const std::vector<F>& flats) {
  std::vector<long> mu(flats.size(), 0);
  for (std::size_t x = 0; x < flats.size(); ++x) {
    if (flats[x].hyperplanes.empty()) {
      mu[x] = 1;
      continue;
    }
    long s = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (flats[y].hyperplanes.size() < flats[x].hyperplanes.size() &&
          subset_of(flats[y].hyperplanes, flats[x].hyperplanes))
        s += mu[y];
    }
    mu[x] = -s;
  }
  return mu;
}

}  // namespace

IntersectionLattice::IntersectionLattice(const Arrangement& arr) : dim_(arr.dim()) {
  const std::size_t n = arr.dim();
  std::map<std::vector<std::size_t>, std::size_t> seen;
  flats_.push_back({{}, RatMatrix(0, n), 0});
  seen[{}] = 0;
  by_codim_.push_back({0});
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Flat> next;
    for (std::size_t fi : by_codim_[c]) {
      const Flat base = flats_[fi];
      for (std::size_t h = 0; h < arr.size(); ++h) {
        if (std::binary_search(base.hyperplanes.begin(), base.hyperplanes.end(), h)) continue;
        std::vector<std::vector<Rat>> rows;
        for (std::size_t r = 0; r < base.normals.rows(); ++r) rows.push_back(base.normals.row_vector(r));
        rows.push_back(arr[h].coeffs());
        RrefResult e = rref(stack(rows, n));
        std::vector<std::size_t> closed;
        for (std::size_t g = 0; g < arr.size(); ++g) {
          if (in_span(e, arr[g].coeffs())) closed.push_back(g);
        }
        if (seen.count(closed)) continue;
        seen[closed] = 0;
        next.push_back({closed, leading_rows(e), c + 1});
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const Flat& a, const Flat& b) { return a.hyperplanes < b.hyperplanes; });
    by_codim_.emplace_back();
    for (auto& f : next) {
      seen[f.hyperplanes] = flats_.size();
      by_codim_.back().push_back(flats_.size());
      flats_.push_back(std::move(f));
    }
  }
  mobius_ = mobius_by_inclusion(flats_);
}

bool IntersectionLattice::leq(std::size_t x, std::size_t y) const {
  return subset_of(flats_.at(x).hyperplanes, flats_.at(y).hyperplanes);
}

std::size_t IntersectionLattice::find(const std::vector<std::size_t>& hyperplanes) const {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i].hyperplanes == hyperplanes) return i;
  }
  throw std::out_of_range("no flat with this hyperplane set");
}

IntersectionLattice build_lattice(const Arrangement& arr) { return IntersectionLattice(arr); }

UniPoly char_poly(const IntersectionLattice& lat) {
  UniPoly chi;
  for (std::size_t i = 0; i < lat.flats().size(); ++i) {
    int d = static_cast<int>(lat.dim() - lat.flats()[i].codim);
    chi += UniPoly::monomial(d, Rat(lat.mobius()[i]));
  }
  return chi;
}

UniPoly char_poly(const Arrangement& arr) { return char_poly(IntersectionLattice(arr)); }

UniPoly reduced_char_poly(const Arrangement& arr) {
  if (arr.size() == 0) throw std::invalid_argument("reduced characteristic polynomial needs m >= 1");
  UniPoly chi = char_poly(arr);
  auto [q, r] = divmod(chi, UniPoly({Rat(-1), Rat(1)}));
  if (!r.is_zero()) throw NotDivisible("characteristic polynomial does not vanish at t = 1");
  return q;
}

AffinePoset::AffinePoset(const AffineArrangement& aff) : dim_(aff.dim()) {
  const std::size_t n = aff.dim();
  const auto& hs = aff.hyperplanes();
  auto row_of = [&](std::size_t h) {
    std::vector<Rat> v = hs[h].normal.coeffs();
    v.push_back(hs[h].offset);
    return v;
  };
  std::map<std::vector<std::size_t>, bool> seen;
  flats_.push_back({{}, RatMatrix(0, n + 1), n});
  seen[{}] = true;
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<AffineFlat> next;
    for (std::size_t fi : level) {
      const AffineFlat base = flats_[fi];
      for (std::size_t h = 0; h < hs.size(); ++h) {
        if (std::binary_search(base.hyperplanes.begin(), base.hyperplanes.end(), h)) continue;
        std::vector<std::vector<Rat>> rows;
        for (std::size_t r = 0; r < base.augmented.rows(); ++r) rows.push_back(base.augmented.row_vector(r));
        rows.push_back(row_of(h));
        RrefResult e = rref(stack(rows, n + 1));
        // An echelon row whose pivot is the offset column means the system is inconsistent.
        if (!e.pivots.empty() && e.pivots.back() == n) continue;
        if (e.pivots.size() == base.augmented.rows()) continue;
        std::vector<std::size_t> closed;
        for (std::size_t g = 0; g < hs.size(); ++g) {
          if (in_span(e, row_of(g))) closed.push_back(g);
        }
        if (seen.count(closed)) continue;
        seen[closed] = true;
        next.push_back({closed, leading_rows(e), n - e.pivots.size()});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const AffineFlat& a, const AffineFlat& b) { return a.hyperplanes < b.hyperplanes; });
    level.clear();
    for (auto& f : next) {
      level.push_back(flats_.size());
      flats_.push_back(std::move(f));
    }
  }
  mobius_ = mobius_by_inclusion(flats_);
}

UniPoly affine_char_poly(const AffineArrangement& aff) {
  AffinePoset poset(aff);
  UniPoly chi;
  for (std::size_t i = 0; i < poset.flats().size(); ++i)
    chi += UniPoly::monomial(static_cast<int>(poset.flats()[i].dim), Rat(poset.mobius()[i]));
  return chi;
}

}  // namespace arrfree

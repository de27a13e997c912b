#include "arrfree/log_modules.hpp"

#include <algorithm>
#include <functional>

#include "arrfree/monomial_basis.hpp"
#include "arrfree/sparse_linalg.hpp"

namespace arrfree {

namespace {

std::size_t nullity(const PieceSystem& sys) {
  return sys.layout.unknowns() - rank_modular(sys.conditions);
}

std::vector<MultiPoly> components_from_vector(const PieceLayout& lay, const MonomialBasis& mb, const SparseVec& v) {
  std::vector<MultiPoly> comps(lay.ncomp, MultiPoly(lay.nvars));
  for (const auto& [col, val] : v) comps[col / lay.block].add_term(mb[col % lay.block], val);
  return comps;
}

std::map<std::vector<std::size_t>, std::size_t> subset_index(std::size_t n, std::size_t p) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  auto subs = subsets(n, p);
  for (std::size_t i = 0; i < subs.size(); ++i) idx[subs[i]] = i;
  return idx;
}

/// Numerator of omega over the defining polynomial Q; empty optional on failure.
bool numerator_over(const MultiPoly& q, const LogForm& omega, std::vector<MultiPoly>& out) {
  out.clear();
  for (const auto& eta : omega.numerator) {
    try {
      out.push_back(poly_divexact(q * eta, omega.denominator));
    } catch (const NotDivisible&) {
      return false;
    }
  }
  return true;
}

MultiPoly det_laplace(const std::vector<std::vector<MultiPoly>>& m, std::vector<std::size_t>& cols, std::size_t row) {
  std::size_t n = m.size();
  std::size_t nv = m[0][0].nvars();
  if (row == n) return MultiPoly::constant(nv, Rat(1));
  MultiPoly acc(nv);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(k));
      MultiPoly minor = det_laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      MultiPoly term = m[row][c] * minor;
      if (sign > 0) acc += term;
      else acc -= term;
    }
    sign = -sign;
  }
  return acc;
}

bool homogeneous_of(const MultiPoly& f, int d) { return f.is_zero() || (f.is_homogeneous() && f.total_degree() == d); }

}  // namespace

bool Derivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const MultiPoly& f) { return f.is_zero(); });
}

MultiPoly Derivation::apply(const MultiPoly& f) const {
  MultiPoly out(f.nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * f.derivative(i);
  }
  return out;
}

bool LogForm::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](const MultiPoly& f) { return f.is_zero(); });
}

Derivation euler_derivation(std::size_t l) {
  Derivation e;
  e.degree = 1;
  for (std::size_t i = 0; i < l; ++i) e.coeffs.push_back(MultiPoly::variable(l, i));
  return e;
}

Derivation derivation_from_vector(const PieceLayout& layout, const SparseVec& v) {
  MonomialBasis mb(layout.nvars, layout.degree);
  return {components_from_vector(layout, mb, v), layout.degree};
}

LogForm form_from_vector(const PieceLayout& layout, int p, const SparseVec& v, const MultiPoly& denominator) {
  MonomialBasis mb(layout.nvars, layout.degree);
  LogForm w;
  w.nvars = layout.nvars;
  w.p = p;
  w.numerator = components_from_vector(layout, mb, v);
  w.denominator = denominator;
  w.degree = layout.degree + p - denominator.total_degree();
  return w;
}

SparseVec derivation_to_vector(const Derivation& delta) {
  MonomialBasis mb(delta.nvars(), delta.degree);
  SparseVec v;
  for (std::size_t i = 0; i < delta.coeffs.size(); ++i) {
    for (const auto& [e, c] : delta.coeffs[i].terms()) v.emplace_back(i * mb.size() + mb.index_of(e), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

LogModules::LogModules(const Multiarrangement& ma) : ma_(ma), q_(defining_poly(ma)), builder_(ma) {}

std::vector<Derivation> LogModules::der_basis(int d) {
  if (d < 0) return {};
  PieceSystem sys = builder_.derivations(d);
  MonomialBasis mb(ma_.dim(), d);
  std::vector<Derivation> out;
  for (const auto& v : sparse_kernel(sys.conditions)) out.push_back({components_from_vector(sys.layout, mb, v), d});
  return out;
}

std::vector<LogForm> LogModules::omega_basis(int p, int d) {
  int a = numerator_degree(p, d);
  if (a < 0 || p < 0 || static_cast<std::size_t>(p) > ma_.dim()) return {};
  PieceSystem sys = builder_.forms(p, a);
  std::vector<LogForm> out;
  for (const auto& v : sparse_kernel(sys.conditions)) out.push_back(form_from_vector(sys.layout, p, v, q_));
  return out;
}

std::vector<Derivation> LogModules::dh_basis(std::size_t h, int d) {
  if (d < 0) return {};
  PieceSystem sys = builder_.derivations_killing(h, d);
  MonomialBasis mb(ma_.dim(), d);
  std::vector<Derivation> out;
  for (const auto& v : sparse_kernel(sys.conditions)) out.push_back({components_from_vector(sys.layout, mb, v), d});
  return out;
}

std::size_t LogModules::der_dim(int d) {
  if (d < 0) return 0;
  auto it = der_dims_.find(d);
  if (it != der_dims_.end()) return it->second;
  return der_dims_[d] = nullity(builder_.derivations(d));
}

std::size_t LogModules::omega_dim(int p, int d) {
  int a = numerator_degree(p, d);
  if (a < 0 || p < 0 || static_cast<std::size_t>(p) > ma_.dim()) return 0;
  auto key = std::make_pair(p, d);
  auto it = omega_dims_.find(key);
  if (it != omega_dims_.end()) return it->second;
  return omega_dims_[key] = nullity(builder_.forms(p, a));
}

std::size_t LogModules::dh_dim(std::size_t h, int d) {
  if (d < 0) return 0;
  auto key = std::make_pair(h, d);
  auto it = dh_dims_.find(key);
  if (it != dh_dims_.end()) return it->second;
  return dh_dims_[key] = nullity(builder_.derivations_killing(h, d));
}

std::vector<Derivation> der_graded_piece(const Multiarrangement& ma, int d) { return LogModules(ma).der_basis(d); }

std::vector<LogForm> omega_graded_piece(const Multiarrangement& ma, int p, int d) {
  return LogModules(ma).omega_basis(p, d);
}

std::vector<Derivation> d_H_graded_piece(const Arrangement& arr, std::size_t h, int d) {
  return LogModules(Multiarrangement::simple(arr)).dh_basis(h, d);
}

bool is_logarithmic(const Multiarrangement& ma, const Derivation& delta) {
  if (delta.nvars() != ma.dim()) return false;
  for (const auto& f : delta.coeffs) {
    if (!homogeneous_of(f, delta.degree)) return false;
  }
  for (std::size_t h = 0; h < ma.size(); ++h) {
    MultiPoly alpha = ma[h].to_poly();
    if (!poly_divides(alpha.pow(static_cast<unsigned>(ma.multiplicity(h))), delta.apply(alpha))) return false;
  }
  return true;
}

std::vector<MultiPoly> wedge_linear(const LinForm& alpha, int p, const std::vector<MultiPoly>& eta) {
  std::size_t n = alpha.dim();
  auto src = subsets(n, static_cast<std::size_t>(p));
  auto dst = subset_index(n, static_cast<std::size_t>(p) + 1);
  std::vector<MultiPoly> out(binomial(n, static_cast<std::size_t>(p) + 1), MultiPoly(n));
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (eta[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(alpha[j]) || std::binary_search(src[i].begin(), src[i].end(), j)) continue;
      auto merged = src[i];
      std::size_t before = static_cast<std::size_t>(std::lower_bound(merged.begin(), merged.end(), j) - merged.begin());
      merged.insert(merged.begin() + static_cast<long>(before), j);
      Rat c = (before % 2 == 0) ? alpha[j] : Rat(-alpha[j]);
      out[dst.at(merged)] += eta[i] * c;
    }
  }
  return out;
}

bool is_logarithmic(const Multiarrangement& ma, const LogForm& omega) {
  std::size_t n = ma.dim();
  if (omega.nvars != n || omega.p < 0 || static_cast<std::size_t>(omega.p) > n) return false;
  if (omega.numerator.size() != binomial(n, static_cast<std::size_t>(omega.p))) return false;
  std::vector<MultiPoly> eta;
  if (!numerator_over(defining_poly(ma), omega, eta)) return false;
  for (std::size_t h = 0; h < ma.size(); ++h) {
    MultiPoly power = ma[h].to_poly().pow(static_cast<unsigned>(ma.multiplicity(h)));
    for (const auto& c : wedge_linear(ma[h], omega.p, eta)) {
      if (!poly_divides(power, c)) return false;
    }
  }
  return true;
}

LogForm wedge_dlog(const Multiarrangement& ma, std::size_t h, const LogForm& omega) {
  MultiPoly q = defining_poly(ma);
  std::vector<MultiPoly> eta;
  if (!numerator_over(q, omega, eta)) throw NotLogarithmic("form does not have the defining polynomial as denominator");
  MultiPoly alpha = ma[h].to_poly();
  LogForm out;
  out.nvars = omega.nvars;
  out.p = omega.p + 1;
  out.denominator = q;
  out.degree = omega.degree;
  for (const auto& c : wedge_linear(ma[h], omega.p, eta)) {
    try {
      out.numerator.push_back(poly_divexact(c, alpha));
    } catch (const NotDivisible&) {
      throw NotLogarithmic("d alpha ^ omega is not divisible by alpha");
    }
  }
  return out;
}

LogForm contract(const Multiarrangement& ma, const Derivation& delta, const LogForm& omega) {
  if (!is_logarithmic(ma, delta)) throw NotLogarithmic("derivation is not logarithmic");
  if (!is_logarithmic(ma, omega)) throw NotLogarithmic("form is not logarithmic");
  if (omega.p == 0) throw std::invalid_argument("cannot contract a 0-form");
  std::size_t n = ma.dim();
  auto src = subsets(n, static_cast<std::size_t>(omega.p));
  auto dst = subset_index(n, static_cast<std::size_t>(omega.p) - 1);
  LogForm out;
  out.nvars = n;
  out.p = omega.p - 1;
  out.denominator = omega.denominator;
  out.degree = delta.degree + omega.degree - 1;
  out.numerator.assign(dst.size(), MultiPoly(n));
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (omega.numerator[i].is_zero()) continue;
    for (std::size_t r = 0; r < src[i].size(); ++r) {
      const MultiPoly& f = delta.coeffs[src[i][r]];
      if (f.is_zero()) continue;
      auto rest = src[i];
      rest.erase(rest.begin() + static_cast<long>(r));
      MultiPoly term = f * omega.numerator[i];
      if (r % 2 == 0) out.numerator[dst.at(rest)] += term;
      else out.numerator[dst.at(rest)] -= term;
    }
  }
  return out;
}

LogForm der_to_topform(const Multiarrangement& ma, const Derivation& delta) {
  std::size_t n = ma.dim();
  LogForm top;
  top.nvars = n;
  top.p = static_cast<int>(n);
  top.numerator = {MultiPoly::constant(n, Rat(1))};
  top.denominator = defining_poly(ma);
  top.degree = static_cast<int>(n) - ma.total_multiplicity();
  return contract(ma, delta, top);
}

std::string to_string(NonFreeWitness::Kind k) {
  switch (k) {
    case NonFreeWitness::Kind::TooManyGenerators: return "TooManyGenerators";
    case NonFreeWitness::Kind::TooFewGeneratorsUpToBound: return "TooFewGeneratorsUpToBound";
    case NonFreeWitness::Kind::SaitoDeterminantFails: return "SaitoDeterminantFails";
  }
  return "";
}

namespace {

/// Walks degrees 0..bound, reporting the new minimal generators of each degree to `visit`,
/// which returns true to stop.
void generator_search(const Multiarrangement& ma, int bound,
                      const std::function<bool(int, std::vector<Derivation>&&)>& visit) {
  ConditionBuilder builder(ma);
  std::size_t n = ma.dim();
  std::vector<SparseVec> prev;
  std::unique_ptr<MonomialBasis> prev_basis;
  for (int d = 0; d <= bound; ++d) {
    PieceSystem sys = builder.derivations(d);
    MonomialBasis mb(n, d);
    std::vector<SparseVec> kernel = sparse_kernel(sys.conditions);
    std::vector<SparseVec> products;
    if (prev_basis) {
      for (const auto& v : prev) {
        for (std::size_t j = 0; j < n; ++j) {
          SparseVec w;
          for (const auto& [col, val] : v) {
            std::size_t comp = col / prev_basis->size();
            Exponent e = (*prev_basis)[col % prev_basis->size()];
            e[j] += 1;
            w.emplace_back(sys.layout.column(comp, mb.index_of(e)), val);
          }
          std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          products.push_back(std::move(w));
        }
      }
    }
    SparseRref lower = sparse_rref(products, sys.layout.unknowns());
    std::vector<SparseVec> residues;
    for (const auto& v : kernel) {
      SparseVec r = reduce_against(lower, v);
      if (!r.empty()) residues.push_back(std::move(r));
    }
    std::vector<Derivation> fresh;
    for (const auto& r : sparse_rref(residues, sys.layout.unknowns()).rows)
      fresh.push_back({components_from_vector(sys.layout, mb, r), d});
    if (visit(d, std::move(fresh))) return;
    prev = std::move(kernel);
    prev_basis = std::make_unique<MonomialBasis>(std::move(mb));
  }
}

bool saito_holds(const std::vector<Derivation>& basis, const MultiPoly& q, Rat& scalar) {
  MultiPoly det = saito_determinant(basis);
  if (det.is_zero()) return false;
  scalar = det.leading_coefficient() / q.leading_coefficient();
  return det == q * scalar;
}

}  // namespace

std::vector<Generator> minimal_generators_der(const Multiarrangement& ma, int bound) {
  std::vector<Generator> gens;
  generator_search(ma, bound, [&](int d, std::vector<Derivation>&& fresh) {
    for (auto& g : fresh) gens.push_back({d, std::move(g)});
    return false;
  });
  return gens;
}

MultiPoly saito_determinant(const std::vector<Derivation>& basis) {
  if (basis.empty()) return MultiPoly::constant(0, Rat(1));
  std::vector<std::vector<MultiPoly>> m;
  for (const auto& d : basis) m.push_back(d.coeffs);
  if (m.size() != m[0].size()) throw std::invalid_argument("Saito determinant needs a square family");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_laplace(m, cols, 0);
}

FreenessCertificate freeness_der(const Multiarrangement& ma) {
  const std::size_t l = ma.dim();
  const int bound = ma.total_multiplicity();
  const MultiPoly q = defining_poly(ma);
  FreenessCertificate cert;
  std::vector<Derivation> gens;
  std::vector<int> degrees;
  bool decided = false;
  generator_search(ma, bound, [&](int d, std::vector<Derivation>&& fresh) {
    for (auto& g : fresh) {
      gens.push_back(std::move(g));
      degrees.push_back(d);
    }
    if (gens.size() > l) {
      cert.free = false;
      cert.witness = {NonFreeWitness::Kind::TooManyGenerators, gens.size(), d};
      decided = true;
      return true;
    }
    Rat c;
    if (gens.size() == l && saito_holds(gens, q, c)) {
      cert.free = true;
      cert.basis = gens;
      cert.exponents = degrees;
      cert.saito_scalar = c;
      decided = true;
      return true;
    }
    return false;
  });
  if (!decided) {
    cert.free = false;
    cert.witness = {gens.size() < l ? NonFreeWitness::Kind::TooFewGeneratorsUpToBound
                                    : NonFreeWitness::Kind::SaitoDeterminantFails,
                    gens.size(), bound};
  }
  return cert;
}

CertificateCheck verify_certificate(const Multiarrangement& ma, const FreenessCertificate& cert) {
  if (!cert.free) {
    FreenessCertificate fresh = freeness_der(ma);
    if (fresh.free) return {false, "arrangement is free"};
    if (fresh.witness.kind != cert.witness.kind || fresh.witness.count != cert.witness.count ||
        fresh.witness.degree != cert.witness.degree)
      return {false, "witness does not match a fresh computation"};
    return {true, ""};
  }
  const std::size_t l = ma.dim();
  if (cert.basis.size() != l || cert.exponents.size() != l) return {false, "basis must have exactly l elements"};
  int sum = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const Derivation& d = cert.basis[i];
    if (d.degree != cert.exponents[i]) return {false, "exponent does not match basis degree"};
    if (!is_logarithmic(ma, d)) return {false, "basis element " + std::to_string(i + 1) + " is not logarithmic"};
    sum += cert.exponents[i];
  }
  if (sum != ma.total_multiplicity()) return {false, "exponents do not sum to |k|"};
  if (is_zero(cert.saito_scalar)) return {false, "Saito scalar is zero"};
  if (saito_determinant(cert.basis) != defining_poly(ma) * cert.saito_scalar)
    return {false, "determinant is not the stated multiple of Q"};
  return {true, ""};
}

}  // namespace arrfree

#include "doctest.h"

#include "arrfree/corpus.hpp"
#include "arrfree/freeness.hpp"
#include "arrfree/restriction.hpp"
#include "oracles.hpp"

using namespace arrfree;

namespace {

MultiPoly P(const char* s, std::size_t n) { return parse_multipoly(s, n); }

/// Exact rank of restricted basis elements, computed through res_der / res_form.
std::size_t image_rank_by_restricting(RestrictionWorkspace& ws, int d) {
  oracle::Rows rows;
  for (const auto& delta : ws.parent().dh_basis(ws.data().h, d)) {
    auto r = res_der(ws.data(), delta);
    auto v = to_dense(derivation_to_vector(r), (ws.data().parent.dim() - 1) * oracle::monomials(ws.data().parent.dim() - 1, d));
    rows.push_back(v);
  }
  return oracle::dense_rank(rows);
}

std::size_t form_image_rank_by_restricting(RestrictionWorkspace& ws, int p, int d) {
  oracle::Rows rows;
  std::map<Exponent, std::size_t> col;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> entries;
  for (const auto& w : ws.parent().omega_basis(p, d)) {
    auto r = res_form(ws.data(), w);
    std::vector<std::pair<std::size_t, Rat>> row;
    for (std::size_t i = 0; i < r.numerator.size(); ++i) {
      MultiPoly num = r.numerator[i];
      for (const auto& [e, c] : num.terms()) {
        Exponent key = e;
        key.push_back(static_cast<int>(i));
        auto [it, fresh] = col.emplace(key, col.size());
        row.emplace_back(it->second, c);
      }
    }
    entries.push_back(row);
  }
  for (auto& e : entries) {
    std::vector<Rat> v(col.size(), Rat(0));
    for (auto& [i, c] : e) v[i] += c;
    rows.push_back(v);
  }
  return oracle::dense_rank(rows);
}

}  // namespace

TEST_CASE("restriction of the boolean arrangement") {
  auto rd = ziegler_restriction(boolean_arrangement(3), 0);
  CHECK(rd.restricted.size() == 2);
  CHECK(rd.restricted.multiplicities() == std::vector<int>{1, 1});
  CHECK(rd.index_map[0] == -1);
}

TEST_CASE("three lines restrict to a double point") {
  auto arr = braid_essential_arrangement(3);
  for (std::size_t h = 0; h < 3; ++h) {
    auto rd = ziegler_restriction(arr, h);
    CHECK(rd.restricted.size() == 1);
    CHECK(rd.restricted.multiplicities() == std::vector<int>{2});
  }
}

TEST_CASE("generic restrictions are simple") {
  auto arr = corpus_from_spec("generic:4:6");
  for (std::size_t h = 0; h < 6; ++h) {
    auto rd = ziegler_restriction(arr, h);
    CHECK(rd.restricted.size() == 5);
    CHECK(rd.restricted.is_simple());
  }
}

TEST_CASE("multiplicities agree with the substitution oracle and sum to m - 1") {
  for (const char* spec : {"boolean:4", "braid:4", "braid_essential:4", "braid_essential:5", "generic:3:5"}) {
    auto arr = corpus_from_spec(spec);
    auto n = oracle::normals_of(arr);
    for (std::size_t h = 0; h < arr.size(); ++h) {
      auto rd = ziegler_restriction(arr, h);
      CHECK(rd.restricted.total_multiplicity() == static_cast<int>(arr.size()) - 1);
      auto expect = oracle::restrict_normals(n, h);
      std::vector<int> em;
      for (auto& [b, k] : expect) em.push_back(k);
      std::vector<int> got = rd.restricted.multiplicities();
      std::sort(em.begin(), em.end());
      std::sort(got.begin(), got.end());
      CHECK(em == got);
      MultiPoly qh = defining_poly(rd.restricted);
      CHECK(restricted_quotient(rd) == qh * rd.scale);
    }
  }
}

TEST_CASE("restricting derivations") {
  auto arr = boolean_arrangement(3);
  auto rd = ziegler_restriction(arr, 0);
  Derivation d{{P("0", 3), P("x2", 3), P("0", 3)}, 1};
  auto r = res_der(rd, d);
  REQUIRE(r.coeffs.size() == 2);
  CHECK(r.coeffs[0] == P("x1", 2));
  CHECK(r.coeffs[1].is_zero());

  MultiPoly q = defining_poly(arr);
  Derivation qd{{P("0", 3), q, P("0", 3)}, 3};
  CHECK(res_der(rd, qd).is_zero());
  CHECK_THROWS_AS(res_der(rd, euler_derivation(3)), NotInDH);
}

TEST_CASE("restricting forms") {
  auto arr = boolean_arrangement(3);
  auto rd = ziegler_restriction(arr, 0);
  Multiarrangement ma = Multiarrangement::simple(arr);
  LogForm dlog_h{3, 1, {P("x2*x3", 3), P("0", 3), P("0", 3)}, P("x1*x2*x3", 3), 0};
  CHECK(res_form(rd, dlog_h).is_zero());
  LogForm dx2{3, 1, {P("0", 3), P("x1*x3", 3), P("0", 3)}, P("x1*x2*x3", 3), 0};
  auto r = res_form(rd, dx2);
  REQUIRE(r.numerator.size() == 2);
  CHECK(r.numerator[1].is_zero());
  CHECK(poly_divexact(r.denominator, r.numerator[0]) == P("x1", 2));
  CHECK(is_logarithmic(rd.restricted, r));
}

TEST_CASE("image dimensions agree with restricting a basis") {
  auto arr = braid_essential_arrangement(4);
  for (std::size_t h = 0; h < arr.size(); h += 2) {
    RestrictionWorkspace ws(arr, h);
    for (int d = 0; d <= 6; ++d) CHECK(ws.image_der_dim(d) == image_rank_by_restricting(ws, d));
  }
  auto g = corpus_from_spec("generic:4:6");
  RestrictionWorkspace ws(g, 0);
  for (int d = 0; d <= 5; ++d) CHECK(ws.image_der_dim(d) == image_rank_by_restricting(ws, d));
  for (int p = 1; p <= 2; ++p)
    for (int d = -2; d <= 1; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      CHECK(ws.image_form_dim(p, d) == form_image_rank_by_restricting(ws, p, d));
    }
}

TEST_CASE("top-minus-one and zero forms always restrict onto") {
  for (const char* spec : {"boolean:3", "boolean:4", "generic:3:4"}) {
    auto arr = corpus_from_spec(spec);
    RestrictionWorkspace ws(arr, 0);
    int l = static_cast<int>(arr.dim());
    for (int d = -3; d <= 6; ++d) {
      CHECK(ws.coker_form_dim(l - 1, d) == 0);
      CHECK(ws.coker_form_dim(0, d) == 0);
    }
  }
}

TEST_CASE("cokernels of free arrangements vanish") {
  for (const char* spec : {"boolean:3", "braid_essential:4", "braid:4"}) {
    auto arr = corpus_from_spec(spec);
    for (std::size_t h = 0; h < arr.size(); ++h) {
      RestrictionWorkspace ws(arr, h);
      for (int d = 0; d <= 6; ++d) CHECK(ws.coker_der_dim(d) == 0);
      for (int p = 1; p < static_cast<int>(arr.dim()); ++p)
        for (int d = -2; d <= 4; ++d) CHECK(ws.coker_form_dim(p, d) == 0);
    }
  }
}

TEST_CASE("cokernels of a non-free four-arrangement") {
  auto arr = corpus_from_spec("generic:4:6");
  RestrictionWorkspace ws(arr, 0);
  std::vector<std::size_t> c, c2;
  for (int d = 0; d <= 4; ++d) c.push_back(ws.coker_der_dim(d));
  for (int d = -3; d <= 1; ++d) c2.push_back(ws.coker_form_dim(2, d));
  CHECK(c == std::vector<std::size_t>{0, 1, 3, 0, 0});
  CHECK(c2 == std::vector<std::size_t>{0, 1, 3, 0, 0});
  std::size_t c1 = 0;
  for (int d = -3; d <= 4; ++d) c1 += ws.coker_form_dim(1, d);
  CHECK(c1 == 0);

  auto pr = prop13_check(ws, -4, 6);
  CHECK(pr.ok);
  CHECK(pr.offset == pr.predicted);
  CHECK(pr.offset == 3);
}

TEST_CASE("three-arrangement with a free restriction") {
  auto arr = corpus_from_spec("generic:3:5");
  RestrictionWorkspace ws(arr, 0);
  CHECK(freeness_der(ws.data().restricted).free);
  auto pr = prop13_check(ws, -4, 6);
  CHECK(pr.ok);
  CHECK(pr.offset == pr.predicted);
  std::size_t nonzero = 0;
  for (int d = pr.lo; d <= pr.hi; ++d) {
    int e = d + pr.offset;
    if (e > pr.hi) break;
    CHECK(pr.der_side[e - pr.lo] == pr.form_side[d - pr.lo]);
    nonzero += pr.form_side[d - pr.lo];
  }
  CHECK(nonzero > 0);
}

TEST_CASE("both sides vanishing is reported") {
  RestrictionWorkspace ws(boolean_arrangement(4), 0);
  CHECK_THROWS_AS(prop13_check(ws, -2, 4), WindowTooSmall);
}

TEST_CASE("surjectivity of one-forms") {
  for (const char* spec : {"boolean:3", "braid_essential:4"}) {
    auto arr = corpus_from_spec(spec);
    for (std::size_t h = 0; h < arr.size(); ++h) {
      RestrictionWorkspace ws(arr, h);
      CHECK(c1_vanishing_certified(ws));
    }
  }
  auto g = corpus_from_spec("generic:3:4");
  RestrictionWorkspace ws(g, 0);
  CHECK_FALSE(c1_vanishing_certified(ws));
  RestrictionWorkspace nf(corpus_from_spec("generic:4:6"), 0);
  CHECK_THROWS_AS(c1_vanishing_certified(nf), RestrictionNotFree);
}

#include "doctest.h"

#include "arrfree/arrangement.hpp"
#include "arrfree/arrangement_io.hpp"
#include "arrfree/corpus.hpp"
#include "arrfree/lattice.hpp"
#include "oracles.hpp"

using namespace arrfree;

namespace {

std::vector<Rat> v(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::string> corpus_specs() {
  return {"boolean:2", "boolean:3", "boolean:4", "boolean:5", "braid:3", "braid:4", "braid:5",
          "braid_essential:3", "braid_essential:4", "braid_essential:5", "generic:3:4", "generic:3:5",
          "generic:3:6", "generic:4:5", "generic:4:6", "generic:4:7"};
}

}  // namespace

TEST_CASE("defining polynomial") {
  CHECK(defining_poly(boolean_arrangement(3)) == parse_multipoly("x1*x2*x3", 3));
  Multiarrangement dbl(Arrangement(2, {v({1, 0})}), {2});
  CHECK(defining_poly(dbl) == parse_multipoly("x1^2", 2));
  CHECK(defining_poly(Arrangement(2, {})) == MultiPoly::constant(2, 1));
}

TEST_CASE("arrangements reject degenerate input") {
  CHECK_THROWS_AS(Arrangement(2, {v({0, 0})}), ArrangementError);
  CHECK_THROWS_AS(Arrangement(2, {v({1, 2}), v({2, 4})}), ArrangementError);
  CHECK_THROWS_AS(Arrangement(2, {v({1, 2, 3})}), ArrangementError);
  auto ma = Multiarrangement::from_raw(2, {v({1, 2}), v({-2, -4}), v({0, 1})});
  CHECK(ma.size() == 2);
  CHECK(ma.total_multiplicity() == 3);
}

TEST_CASE("coordinate charts") {
  auto c1 = chart_for(boolean_arrangement(3), 0);
  CHECK(c1.forward() == RatMatrix::identity(3));

  auto c2 = chart_for(boolean_arrangement(2), 1);
  CHECK(c2.forward().at(0, 1) == 1);
  CHECK(c2.forward().at(1, 0) == 1);
  CHECK(c2.forward().determinant() != 0);

  auto c3 = chart_for(LinForm::canonical(v({1, 1})));
  CHECK(c3.forward().determinant() != 0);
  auto y = c3.form_in_chart(v({1, 1}));
  CHECK(y == v({1, 0}));
  MultiPoly alpha = MultiPoly::linear(v({1, 1}));
  CHECK(c3.pull(alpha) == MultiPoly::variable(2, 0));
}

TEST_CASE("affine slices") {
  auto s = affine_slice(boolean_arrangement(3), 0, Rat(1));
  CHECK(s.dim() == 2);
  CHECK(s.size() == 2);
  for (const auto& h : s.hyperplanes()) CHECK(h.offset == 0);

  auto s2 = affine_slice(boolean_arrangement(2), 0, Rat(1));
  CHECK(s2.size() == 1);

  Arrangement br(3, {v({1, -1, 0}), v({1, 0, -1}), v({0, 1, -1})});
  auto s3 = affine_slice(br, 0, Rat(1));
  CHECK(s3.dim() == 2);
  CHECK(s3.size() == 2);
  CHECK(affine_char_poly(s3) == reduced_char_poly(br));
}

TEST_CASE("corpus members") {
  auto b = corpus_from_spec("boolean:3");
  CHECK(b.size() == 3);
  CHECK(b.dim() == 3);
  auto br = corpus_from_spec("braid:4");
  CHECK(br.size() == 6);
  CHECK(br.dim() == 4);
  CHECK(br.rank() == 3);
  auto g = corpus_from_spec("generic:3:4:1");
  CHECK(g.size() == 4);
  auto n = oracle::normals_of(g);
  for (std::size_t skip = 0; skip < 4; ++skip) {
    oracle::Rows rows;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) rows.push_back(n[i]);
    CHECK(oracle::dense_rank(rows) == 3);
  }
  CHECK(corpus_from_spec("generic:3:4") .hyperplanes() == g.hyperplanes());
  CHECK(corpus_from_spec("generic:4:6:9").size() == 6);
  CHECK_THROWS_AS(corpus_from_spec("boolean:0"), BadParams);
  CHECK_THROWS_AS(corpus_from_spec("nosuch:3"), BadParams);
  CHECK_THROWS_AS(corpus_from_spec("generic:3"), BadParams);
  CHECK_THROWS_AS(corpus_from_spec("braid:x"), BadParams);
}

TEST_CASE("generic arrangements are in general position for several seeds") {
  for (std::uint32_t seed : {1u, 2u, 3u, 17u}) {
    auto g = generic_arrangement(4, 6, seed);
    auto n = oracle::normals_of(g);
    for (std::size_t mask = 0; mask < 64; ++mask) {
      if (std::popcount(mask) != 4) continue;
      oracle::Rows rows;
      for (std::size_t i = 0; i < 6; ++i)
        if (mask >> i & 1) rows.push_back(n[i]);
      CHECK(oracle::dense_rank(rows) == 4);
    }
  }
}

TEST_CASE("json input is strict") {
  auto ok = nlohmann::json::parse(R"({"dim":2,"hyperplanes":[["1","0"],["1","1/2"]],"multiplicities":[2,1]})");
  auto ma = arrangement_from_json(ok);
  CHECK(ma.total_multiplicity() == 3);
  CHECK(arrangement_from_json(nlohmann::json::parse(arrangement_to_json(ma).dump())).multiplicities() ==
        ma.multiplicities());

  for (const char* bad : {
           R"({"dim":2,"hyperplanes":[["1","0"]],"extra":1})",
           R"({"dim":2,"hyperplanes":[["1","0","0"]]})",
           R"({"dim":2,"hyperplanes":[[1,0]]})",
           R"({"dim":2,"hyperplanes":[["0","0"]]})",
           R"({"dim":0,"hyperplanes":[]})",
           R"({"dim":2,"hyperplanes":[["1","0"]],"multiplicities":[0]})",
           R"({"dim":2,"hyperplanes":[["1","0"]],"multiplicities":[1,1]})",
           R"({"dim":2,"hyperplanes":[["1","x"]]})",
           R"({"hyperplanes":[["1","0"]]})",
           R"([1,2])",
       }) {
    CAPTURE(bad);
    CHECK_THROWS(arrangement_from_json(nlohmann::json::parse(bad)));
  }
}

TEST_CASE("small lattices") {
  IntersectionLattice b2(boolean_arrangement(2));
  REQUIRE(b2.flats().size() == 4);
  CHECK(b2.mobius() == std::vector<long>{1, -1, -1, 1});

  IntersectionLattice b3(boolean_arrangement(3));
  CHECK(b3.flats().size() == 8);
  for (std::size_t i = 0; i < b3.flats().size(); ++i)
    CHECK(b3.mobius()[i] == ((b3.flats()[i].codim % 2) ? -1 : 1));

  IntersectionLattice be3(braid_essential_arrangement(3));
  CHECK(be3.mobius().back() == 2);
  CHECK(be3.flats().back().codim == 2);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(boolean_arrangement(4)) == UniPoly::from_roots(std::vector<int>{1, 1, 1, 1}));
  CHECK(char_poly(braid_arrangement(4)) == UniPoly::from_roots(std::vector<int>{0, 1, 2, 3}));
  auto g = corpus_from_spec("generic:3:4:1");
  UniPoly q({Rat(3), Rat(-3), Rat(1)});
  CHECK(char_poly(g) == UniPoly::from_roots(std::vector<int>{1}) * q);
  CHECK(reduced_char_poly(g) == q);
  CHECK(reduced_char_poly(boolean_arrangement(3)) == UniPoly::from_roots(std::vector<int>{1, 1}));
  CHECK(reduced_char_poly(braid_essential_arrangement(3)) == UniPoly::from_roots(std::vector<int>{2}));
  CHECK_THROWS_AS(reduced_char_poly(Arrangement(2, {})), std::invalid_argument);
}

TEST_CASE("characteristic polynomial agrees with subset sums and deletion-restriction") {
  for (const auto& spec : corpus_specs()) {
    CAPTURE(spec);
    auto arr = corpus_from_spec(spec);
    auto n = oracle::normals_of(arr);
    UniPoly chi = char_poly(arr);
    CHECK(chi == oracle::whitney_char_poly(n, arr.dim()));
    CHECK(chi == oracle::deletion_restriction(n, arr.dim()));
    CHECK(chi.eval(1) == 0);
  }
}

TEST_CASE("affine characteristic polynomials") {
  AffineArrangement parallel(2, {{LinForm::canonical(v({1, 0})), Rat(0)}, {LinForm::canonical(v({1, 0})), Rat(1)}});
  CHECK(affine_char_poly(parallel) == UniPoly({Rat(0), Rat(-2), Rat(1)}));
  CHECK(affine_char_poly(AffineArrangement(3, {})) == UniPoly::monomial(3));
  CHECK(affine_char_poly(affine_slice(boolean_arrangement(3), 0, Rat(1))) ==
        UniPoly::from_roots(std::vector<int>{1, 1}));
  for (const auto& spec : corpus_specs()) {
    auto arr = corpus_from_spec(spec);
    for (std::size_t h = 0; h < arr.size(); ++h)
      CHECK(affine_char_poly(affine_slice(arr, h, Rat(2))) == reduced_char_poly(arr));
  }
}

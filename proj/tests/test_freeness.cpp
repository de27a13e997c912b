#include "doctest.h"

#include "arrfree/corpus.hpp"
#include "arrfree/freeness.hpp"
#include "arrfree/lattice.hpp"
#include "arrfree/report_json.hpp"

using namespace arrfree;

TEST_CASE("product comparison") {
  auto sq = UniPoly::from_roots(std::vector<int>{1, 1});
  auto r = eq2_check(sq, {1, 1}, 3, 3);
  CHECK(r.holds);
  CHECK(r.degree_ok);
  CHECK(r.sum_ok);

  UniPoly irr({Rat(3), Rat(-3), Rat(1)});
  for (auto e : std::vector<std::vector<int>>{{1, 2}, {0, 3}, {1, 1}, {3, 0}}) CHECK_FALSE(eq2_check(irr, e, 3, 4).holds);
  auto wrong_sum = eq2_check(irr, {1, 1}, 3, 4);
  CHECK_FALSE(wrong_sum.sum_ok);

  CHECK(eq2_check(UniPoly::from_roots(std::vector<int>{2, 3, 4}), {2, 3, 4}, 4, 10).holds);
  auto deg = eq2_check(sq, {1, 1, 0}, 4, 3);
  CHECK_FALSE(deg.holds);
  CHECK_FALSE(deg.degree_ok);
}

TEST_CASE("tameness names") {
  CHECK(parse_tameness("none") == Tameness::None);
  CHECK(parse_tameness("weakly-tame") == Tameness::WeaklyTame);
  CHECK(parse_tameness("weakly-dually-tame") == Tameness::WeaklyDuallyTame);
  CHECK_THROWS(parse_tameness("tame"));
}

TEST_CASE("boolean arrangement in three dimensions") {
  for (std::size_t h = 0; h < 3; ++h) {
    auto r = theorem1_test(boolean_arrangement(3), h, Tameness::None, true);
    CHECK(r.verdict == Verdict::Free);
    CHECK(r.restriction_certificate.exponents == std::vector<int>{1, 1});
    CHECK(r.chi0 == r.eq2.rhs);
    CHECK(r.applicability == Applicability::Unconditional);
    REQUIRE(r.cross_check);
    CHECK(r.cross_check->exponents == std::vector<int>{1, 1, 1});
    CHECK(r.agrees.value());
  }
}

TEST_CASE("essential braid arrangement in four dimensions") {
  auto arr = braid_essential_arrangement(5);
  REQUIRE(arr.size() == 10);
  auto direct = freeness_der(Multiarrangement::simple(arr));
  CHECK(direct.exponents == std::vector<int>{1, 2, 3, 4});
  for (std::size_t h : {0ul, 4ul, 9ul}) {
    auto r = theorem1_test(arr, h, Tameness::None, direct);
    CHECK(r.restriction_certificate.free);
    CHECK(r.restriction_certificate.exponents == std::vector<int>{2, 3, 4});
    CHECK(r.chi0 == UniPoly::from_roots(std::vector<int>{2, 3, 4}));
    CHECK(r.verdict == Verdict::Free);
    CHECK(r.agrees.value());
  }
}

TEST_CASE("generic three-arrangement with four planes") {
  auto arr = corpus_from_spec("generic:3:4:1");
  for (std::size_t h = 0; h < 4; ++h) {
    auto r = theorem1_test(arr, h, Tameness::None, true);
    CHECK(r.chi0 == UniPoly({Rat(3), Rat(-3), Rat(1)}));
    CHECK_FALSE(r.eq2.holds);
    CHECK(r.verdict == Verdict::NonFree);
    CHECK(r.agrees.value());
  }
}

TEST_CASE("five dimensions need an assumption") {
  auto arr = boolean_arrangement(5);
  auto none = theorem1_test(arr, 0, Tameness::None, false);
  CHECK(none.verdict == Verdict::Inapplicable);
  CHECK(none.restriction_certificate.free);
  CHECK(none.eq2.holds);
  auto tame = theorem1_test(arr, 0, Tameness::WeaklyTame, false);
  CHECK(tame.applicability == Applicability::AssumedWeaklyTame);
  CHECK(tame.verdict == Verdict::Free);
  auto dual = theorem1_test(arr, 0, Tameness::WeaklyDuallyTame, false);
  CHECK(dual.applicability == Applicability::AssumedWeaklyDuallyTame);
}

TEST_CASE("a wrong direct certificate is reported as an inconsistency") {
  auto arr = corpus_from_spec("generic:3:4");
  FreenessCertificate fake;
  fake.free = true;
  fake.exponents = {1, 1, 2};
  CHECK_THROWS_AS(theorem1_test(arr, 0, Tameness::None, fake), InternalInconsistency);

  auto b = boolean_arrangement(3);
  FreenessCertificate wrong;
  wrong.free = true;
  wrong.exponents = {0, 1, 2};
  CHECK_THROWS_AS(terao_check(b, wrong), InternalInconsistency);
}

TEST_CASE("reports serialize deterministically") {
  auto r = theorem1_test(corpus_from_spec("braid_essential:4"), 2, Tameness::None, true);
  auto j1 = theorem1_to_json(r).dump();
  auto j2 = theorem1_to_json(theorem1_test(corpus_from_spec("braid_essential:4"), 2, Tameness::None, true)).dump();
  CHECK(j1 == j2);
  auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed["verdict"] == "Free");
  CHECK(parsed["hyperplane"] == 3);
  Multiarrangement back;
  auto cert = certificate_from_json(parsed["restriction_certificate"], back);
  CHECK(back.multiplicities() == r.restricted.multiplicities());
  CHECK(cert.exponents == r.restriction_certificate.exponents);
  CHECK(verify_certificate(back, cert).ok);
}

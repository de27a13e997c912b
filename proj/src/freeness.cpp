#include "arrfree/freeness.hpp"

#include <numeric>

#include "arrfree/lattice.hpp"

namespace arrfree {

std::string to_string(Tameness t) {
  switch (t) {
    case Tameness::None: return "none";
    case Tameness::WeaklyTame: return "weakly-tame";
    case Tameness::WeaklyDuallyTame: return "weakly-dually-tame";
  }
  return "";
}

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::Unconditional: return "Unconditional";
    case Applicability::AssumedWeaklyTame: return "AssumedWeaklyTame";
    case Applicability::AssumedWeaklyDuallyTame: return "AssumedWeaklyDuallyTame";
    case Applicability::Inapplicable: return "Inapplicable";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Free: return "Free";
    case Verdict::NonFree: return "NonFree";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "";
}

Tameness parse_tameness(const std::string& s) {
  if (s == "none") return Tameness::None;
  if (s == "weakly-tame") return Tameness::WeaklyTame;
  if (s == "weakly-dually-tame") return Tameness::WeaklyDuallyTame;
  throw std::invalid_argument("unknown tameness assumption '" + s + "'");
}

Eq2Result eq2_check(const UniPoly& chi0, const std::vector<int>& exponents, std::size_t l, std::size_t m) {
  Eq2Result r;
  r.rhs = UniPoly::from_roots(exponents);
  r.degree_ok = chi0.degree() == static_cast<int>(l) - 1;
  r.sum_ok = std::accumulate(exponents.begin(), exponents.end(), 0L) == static_cast<long>(m) - 1;
  r.holds = r.degree_ok && r.sum_ok && chi0 == r.rhs;
  return r;
}

namespace {

Theorem1Report run(const Arrangement& arr, std::size_t h, Tameness assume, const FreenessCertificate* direct) {
  if (arr.size() == 0) throw std::invalid_argument("the criterion needs at least one hyperplane");
  std::size_t l = arr.dim();
  Theorem1Report rep;
  rep.h = h;
  RestrictionData rd = ziegler_restriction(arr, h);
  rep.restricted = rd.restricted;
  rep.restriction_certificate = freeness_der(rd.restricted);
  rep.chi0 = reduced_char_poly(arr);
  if (rep.restriction_certificate.free) {
    rep.eq2 = eq2_check(rep.chi0, rep.restriction_certificate.exponents, l, arr.size());
  } else {
    rep.eq2.degree_ok = rep.chi0.degree() == static_cast<int>(l) - 1;
  }

  if (l <= 3) {
    rep.applicability = Applicability::Unconditional;
    rep.applicability_basis = "l <= 3: covered by the three-dimensional case";
  } else if (l == 4) {
    rep.applicability = Applicability::Unconditional;
    rep.applicability_basis = "l = 4: covered by the four-dimensional case";
  } else if (assume == Tameness::WeaklyTame) {
    rep.applicability = Applicability::AssumedWeaklyTame;
    rep.applicability_basis = "l >= 5: user-declared weak tameness";
  } else if (assume == Tameness::WeaklyDuallyTame) {
    rep.applicability = Applicability::AssumedWeaklyDuallyTame;
    rep.applicability_basis = "l >= 5: user-declared weak dual tameness";
  } else {
    rep.applicability = Applicability::Inapplicable;
    rep.applicability_basis = "l >= 5 without a tameness assumption";
  }

  bool criterion = rep.restriction_certificate.free && rep.eq2.holds;
  if (rep.applicability == Applicability::Inapplicable) rep.verdict = Verdict::Inapplicable;
  else rep.verdict = criterion ? Verdict::Free : Verdict::NonFree;

  if (direct) {
    rep.cross_check = *direct;
    if (direct->free && !criterion)
      throw InternalInconsistency("arrangement is free but its restriction fails the criterion at hyperplane " +
                                  std::to_string(h + 1));
    if (rep.verdict != Verdict::Inapplicable) {
      bool agree = (rep.verdict == Verdict::Free) == direct->free;
      if (!agree)
        throw InternalInconsistency("criterion verdict disagrees with the direct certificate at hyperplane " +
                                    std::to_string(h + 1));
      rep.agrees = true;
    }
  }
  return rep;
}

}  // namespace

Theorem1Report theorem1_test(const Arrangement& arr, std::size_t h, Tameness assume, bool cross_check) {
  if (!cross_check) return run(arr, h, assume, nullptr);
  FreenessCertificate direct = freeness_der(Multiarrangement::simple(arr));
  return run(arr, h, assume, &direct);
}

Theorem1Report theorem1_test(const Arrangement& arr, std::size_t h, Tameness assume,
                             const FreenessCertificate& direct) {
  return run(arr, h, assume, &direct);
}

bool terao_check(const Arrangement& arr, const FreenessCertificate& cert) {
  if (!cert.free) return true;
  if (char_poly(arr) != UniPoly::from_roots(cert.exponents))
    throw InternalInconsistency("free certificate contradicts the characteristic polynomial");
  return true;
}

bool terao_check(const Arrangement& arr) {
  return terao_check(arr, freeness_der(Multiarrangement::simple(arr)));
}

}  // namespace arrfree

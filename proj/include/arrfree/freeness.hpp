#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/log_modules.hpp"
#include "arrfree/restriction.hpp"
#include "arrfree/unipoly.hpp"

namespace arrfree {

class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Tameness { None, WeaklyTame, WeaklyDuallyTame };
enum class Applicability { Unconditional, AssumedWeaklyTame, AssumedWeaklyDuallyTame, Inapplicable };
enum class Verdict { Free, NonFree, Inapplicable };

std::string to_string(Tameness t);
std::string to_string(Applicability a);
std::string to_string(Verdict v);
/// Accepts "none", "weakly-tame", "weakly-dually-tame".
Tameness parse_tameness(const std::string& s);

struct Eq2Result {
  bool holds = false;
  bool degree_ok = false;  // deg chi0 = l - 1
  bool sum_ok = false;     // sum of exponents = m - 1
  UniPoly rhs;             // prod (t - d)
};

/// Exact comparison of chi0 with prod (t - d) together with the two necessary conditions.
Eq2Result eq2_check(const UniPoly& chi0, const std::vector<int>& exponents, std::size_t l, std::size_t m);

struct Theorem1Report {
  std::size_t h = 0;
  Multiarrangement restricted;
  FreenessCertificate restriction_certificate;
  UniPoly chi0;
  Eq2Result eq2;
  Applicability applicability = Applicability::Inapplicable;
  std::string applicability_basis;
  Verdict verdict = Verdict::Inapplicable;
  std::optional<FreenessCertificate> cross_check;
  std::optional<bool> agrees;
};

/// Decides freeness of a simple arrangement from its restriction to H. With cross_check,
/// also runs the direct Saito search and throws InternalInconsistency on disagreement.
Theorem1Report theorem1_test(const Arrangement& arr, std::size_t h, Tameness assume, bool cross_check);
/// As above, reusing a precomputed direct certificate for the cross-check.
Theorem1Report theorem1_test(const Arrangement& arr, std::size_t h, Tameness assume,
                             const FreenessCertificate& direct);

/// For a free arrangement, chi(A, t) must equal prod (t - d_i); vacuous otherwise.
/// Throws InternalInconsistency on a contradiction.
bool terao_check(const Arrangement& arr);
bool terao_check(const Arrangement& arr, const FreenessCertificate& cert);

}  // namespace arrfree

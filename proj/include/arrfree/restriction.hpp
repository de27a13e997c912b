#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/log_modules.hpp"

namespace arrfree {

class NotInDH : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisibilityViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WindowTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RestrictionNotFree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The multiarrangement A^H on H, in the chart coordinates y_2, ..., y_l of H.
struct RestrictionData {
  Arrangement parent;
  std::size_t h = 0;
  CoordinateChart chart;
  Multiarrangement restricted;
  /// Parent hyperplane -> restricted hyperplane; -1 for H itself.
  std::vector<long> index_map;
  /// (Q / alpha_H) restricted to H equals scale * Q_H.
  Rat scale;
};

/// Requires l >= 2 and a valid index.
RestrictionData ziegler_restriction(const Arrangement& arr, std::size_t h);

/// (Q / alpha_H) written in the chart of H with y1 = 0.
MultiPoly restricted_quotient(const RestrictionData& rd);

/// Restriction of a derivation killing alpha_H. Throws NotInDH.
Derivation res_der(const RestrictionData& rd, const Derivation& delta);
/// Restriction of a logarithmic p-form. Throws NotLogarithmic or DivisibilityViolated.
LogForm res_form(const RestrictionData& rd, const LogForm& omega);
inline LogForm res_form1(const RestrictionData& rd, const LogForm& omega) { return res_form(rd, omega); }
inline LogForm res_form_p(const RestrictionData& rd, const LogForm& omega) { return res_form(rd, omega); }

/// Degreewise images and cokernels of the restriction maps, with cached dimensions.
class RestrictionWorkspace {
 public:
  RestrictionWorkspace(const Arrangement& arr, std::size_t h);

  const RestrictionData& data() const { return rd_; }
  LogModules& parent() { return *parent_; }
  LogModules& restricted() { return *restricted_; }

  /// dim of the image M_d of D_H(A)_d in D(A^H)_d.
  std::size_t image_der_dim(int d);
  std::size_t coker_der_dim(int d);
  /// dim of the image M^p_d of Omega^p(A)_d in Omega^p(A^H)_d.
  std::size_t image_form_dim(int p, int d);
  std::size_t coker_form_dim(int p, int d);

 private:
  RestrictionData rd_;
  std::unique_ptr<LogModules> parent_;
  std::unique_ptr<LogModules> restricted_;
  std::map<int, std::size_t> image_der_;
  std::map<std::pair<int, int>, std::size_t> image_form_;
};

struct Prop13Result {
  bool ok = false;
  int offset = 0;     // discovered s with dim C_{d+s} = dim C^{l-2}_d
  int predicted = 0;  // m - l + 1 under the degree convention of this library
  int lo = 0;
  int hi = 0;
  std::vector<std::size_t> der_side;   // dim C_d, d in [lo, hi]
  std::vector<std::size_t> form_side;  // dim C^{l-2}_d, d in [lo, hi]
};

/// Looks for one shift matching the cokernel dimensions of both restriction maps over
/// [lo, hi]. Throws WindowTooSmall if both vanish on the window.
Prop13Result prop13_check(RestrictionWorkspace& ws, int lo, int hi);

/// Finite surjectivity check for the restriction of 1-forms when A^H is free: the cokernel
/// must vanish in every degree that carries a generator of Omega^1(A^H).
/// Throws RestrictionNotFree.
bool c1_vanishing_certified(RestrictionWorkspace& ws, const FreenessCertificate& restricted_cert);
bool c1_vanishing_certified(RestrictionWorkspace& ws);

}  // namespace arrfree

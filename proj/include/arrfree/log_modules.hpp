#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrfree/arrangement.hpp"
#include "arrfree/linear_conditions.hpp"
#include "arrfree/multipoly.hpp"

namespace arrfree {

class NotLogarithmic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// delta = sum_i coeffs[i] d/dx_i, every coefficient homogeneous of `degree` or zero.
struct Derivation {
  std::vector<MultiPoly> coeffs;
  int degree = 0;

  std::size_t nvars() const { return coeffs.size(); }
  bool is_zero() const;
  MultiPoly apply(const MultiPoly& f) const;
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// omega = (sum_I numerator[I] dx_I) / denominator, I running over p-subsets in lex order.
/// Degree counts deg x_i = deg dx_i = 1, so it is deg numerator + p - deg denominator.
struct LogForm {
  std::size_t nvars = 0;
  int p = 0;
  std::vector<MultiPoly> numerator;
  MultiPoly denominator;
  int degree = 0;

  bool is_zero() const;
};

Derivation euler_derivation(std::size_t l);
Derivation derivation_from_vector(const PieceLayout& layout, const SparseVec& v);
LogForm form_from_vector(const PieceLayout& layout, int p, const SparseVec& v, const MultiPoly& denominator);
/// Coordinates of a derivation in the layout of its degree.
SparseVec derivation_to_vector(const Derivation& delta);

/// Degreewise bases and dimensions of D(A,k), Omega^p(A,k) and D_H(A). Bases are canonical
/// (reduced echelon in the unknown coordinates); dimensions use modular ranks.
class LogModules {
 public:
  explicit LogModules(const Multiarrangement& ma);

  const Multiarrangement& arrangement() const { return ma_; }
  const MultiPoly& defining() const { return q_; }
  ConditionBuilder& builder() { return builder_; }

  std::vector<Derivation> der_basis(int d);
  std::vector<LogForm> omega_basis(int p, int d);
  std::vector<Derivation> dh_basis(std::size_t h, int d);

  std::size_t der_dim(int d);
  std::size_t omega_dim(int p, int d);
  std::size_t dh_dim(std::size_t h, int d);

  /// Numerator degree of a p-form of degree d.
  int numerator_degree(int p, int d) const { return d - p + ma_.total_multiplicity(); }

 private:
  Multiarrangement ma_;
  MultiPoly q_;
  ConditionBuilder builder_;
  std::map<int, std::size_t> der_dims_;
  std::map<std::pair<int, int>, std::size_t> omega_dims_;
  std::map<std::pair<std::size_t, int>, std::size_t> dh_dims_;
};

std::vector<Derivation> der_graded_piece(const Multiarrangement& ma, int d);
std::vector<LogForm> omega_graded_piece(const Multiarrangement& ma, int p, int d);
std::vector<Derivation> d_H_graded_piece(const Arrangement& arr, std::size_t h, int d);

/// Membership tests by exact division in the original coordinates.
bool is_logarithmic(const Multiarrangement& ma, const Derivation& delta);
bool is_logarithmic(const Multiarrangement& ma, const LogForm& omega);

/// d alpha ^ (form numerator), as a (p+1)-form numerator family.
std::vector<MultiPoly> wedge_linear(const LinForm& alpha, int p, const std::vector<MultiPoly>& eta);
/// (d alpha_H / alpha_H) ^ omega, written over the same denominator.
LogForm wedge_dlog(const Multiarrangement& ma, std::size_t h, const LogForm& omega);
/// Interior product; throws NotLogarithmic unless both inputs are logarithmic.
LogForm contract(const Multiarrangement& ma, const Derivation& delta, const LogForm& omega);
/// Interior product of delta with dx_1 ^ ... ^ dx_l / Q.
LogForm der_to_topform(const Multiarrangement& ma, const Derivation& delta);

struct NonFreeWitness {
  enum class Kind { TooManyGenerators, TooFewGeneratorsUpToBound, SaitoDeterminantFails };
  Kind kind = Kind::TooManyGenerators;
  std::size_t count = 0;  // generators found
  int degree = 0;         // degree where the excess appeared, or the bound
};

std::string to_string(NonFreeWitness::Kind k);

struct FreenessCertificate {
  bool free = false;
  std::vector<Derivation> basis;
  std::vector<int> exponents;  // ascending
  Rat saito_scalar;
  NonFreeWitness witness;
};

struct Generator {
  int degree;
  Derivation derivation;
};

/// Minimal homogeneous generators of D(A,k) of degree <= bound, selected degree by degree as
/// the echelon complement of S_1 times the previous piece.
std::vector<Generator> minimal_generators_der(const Multiarrangement& ma, int bound);

/// Determinant of the coefficient matrix (rows = derivations).
MultiPoly saito_determinant(const std::vector<Derivation>& basis);

FreenessCertificate freeness_der(const Multiarrangement& ma);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Re-checks a Free certificate exactly; a NonFree certificate is re-derived and compared.
CertificateCheck verify_certificate(const Multiarrangement& ma, const FreenessCertificate& cert);

}  // namespace arrfree

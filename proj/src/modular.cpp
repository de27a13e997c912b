#include "arrfree/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace arrfree {

namespace {

constexpr double kP = static_cast<double>(kModPrime);
constexpr double kPinv = 1.0 / kP;
constexpr double kRound = 6755399441055744.0;  // 1.5 * 2^52

inline double reduce(double t) {
  double q = (t * kPinv + kRound) - kRound;
  return t - q * kP;
}

long powmod(long a, long e) {
  long r = 1;
  a %= kModPrime;
  if (a < 0) a += kModPrime;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * a) % kModPrime);
    a = static_cast<long>((static_cast<__int128>(a) * a) % kModPrime);
    e >>= 1;
  }
  return r;
}

inline double balanced(long v) {
  v %= kModPrime;
  if (v < 0) v += kModPrime;
  if (v > kModPrime / 2) v -= kModPrime;
  return static_cast<double>(v);
}

inline long canonical(double v) {
  long x = static_cast<long>(v) % kModPrime;
  return x < 0 ? x + kModPrime : x;
}

double inverse(double v) { return balanced(powmod(canonical(v), kModPrime - 2)); }

}  // namespace

double to_mod(const Rat& q) {
  long n = static_cast<long>(mpz_fdiv_ui(q.get_num_mpz_t(), kModPrime));
  long d = static_cast<long>(mpz_fdiv_ui(q.get_den_mpz_t(), kModPrime));
  if (d == 0) throw std::domain_error("denominator divisible by the modulus");
  return balanced(static_cast<long>((static_cast<__int128>(n) * powmod(d, kModPrime - 2)) % kModPrime));
}

ModEchelon::ModEchelon(std::size_t cols) : cols_(cols), pivot_of_(cols, -1), acc_(cols, 0.0) {}

bool ModEchelon::add(const SparseVec& row) {
  if (row.empty()) return false;
  for (const auto& [j, x] : row) acc_[j] = to_mod(x);
  return reduce_and_insert(row.front().first, row.back().first + 1);
}

bool ModEchelon::add_mod(const std::vector<std::pair<std::size_t, double>>& row) {
  if (row.empty()) return false;
  std::size_t lo = cols_, hi = 0;
  for (const auto& [j, x] : row) {
    acc_[j] = reduce(acc_[j] + x);
    lo = std::min(lo, j);
    hi = std::max(hi, j + 1);
  }
  return reduce_and_insert(lo, hi);
}

bool ModEchelon::reduce_and_insert(std::size_t lo, std::size_t hi) {
  double* acc = acc_.data();
  for (std::size_t c = lo; c < hi; ++c) {
    double f = acc[c];
    if (f == 0.0) continue;
    long p = pivot_of_[c];
    if (p < 0) {
      double inv = inverse(f);
      PivotRow fresh{c, std::vector<double>(hi - c)};
      for (std::size_t j = c; j < hi; ++j) {
        fresh.values[j - c] = reduce(acc[j] * inv);
        acc[j] = 0.0;
      }
      while (!fresh.values.empty() && fresh.values.back() == 0.0) fresh.values.pop_back();
      pivot_of_[c] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(fresh));
      return true;
    }
    const PivotRow& pr = rows_[static_cast<std::size_t>(p)];
    std::size_t n = pr.values.size();
    if (c + n > hi) hi = c + n;
    const double* src = pr.values.data();
    double* dst = acc + c;
    for (std::size_t k = 0; k < n; ++k) dst[k] = reduce(dst[k] - f * src[k]);
  }
  return false;
}

}  // namespace arrfree

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrfree {

/// Exact rational number. Always kept in lowest terms with positive denominator.
using Rat = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (base 10, optional leading sign on p). Rejects anything else,
/// including a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q", or "p" when q = 1.
std::string to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace arrfree

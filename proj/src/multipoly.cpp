#include "arrfree/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace arrfree {

namespace {

int degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides_exponent(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = degree_of(a);
  int db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e), Rat(1));
}

MultiPoly MultiPoly::monomial(Exponent e, const Rat& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rat> coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return degree_of(t.first) == d; });
}

Rat MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading exponent of zero polynomial");
  return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (arrfree::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (arrfree::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (arrfree::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(nvars_, Rat(1));
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: wrong image count");
  std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  MultiPoly out(target_vars);
  // Powers are cached per variable since monomials share them.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target_vars, Rat(1)));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term *= cache[e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::shift(std::size_t var, int k) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[var] += k;
    if (d[var] < 0) throw std::invalid_argument("shift: negative exponent");
    out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
  }
  return out;
}

MultiPoly MultiPoly::restrict_to_zero(std::size_t var) const {
  MultiPoly out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) continue;
    Exponent d;
    d.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var) d.push_back(e[i]);
    }
    out.add_term(d, c);
  }
  return out;
}

MultiPoly MultiPoly::slice(std::size_t var, int k) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == k) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

std::string MultiPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant_term = degree_of(e) == 0;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << arrfree::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << var << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  MultiPoly quotient(a.nvars());
  MultiPoly rem = a;
  const Exponent& lb = b.leading_exponent();
  const Rat& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    if (!divides_exponent(lb, lr)) {
      throw NotDivisible("polynomial is not divisible: leading term " + MultiPoly::monomial(lr, rem.leading_coefficient()).to_string() +
                         " not divisible by " + MultiPoly::monomial(lb, cb).to_string());
    }
    Exponent q(lr.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = lr[i] - lb[i];
    MultiPoly t = MultiPoly::monomial(q, rem.leading_coefficient() / cb);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

bool poly_divides(const MultiPoly& b, const MultiPoly& a) {
  try {
    poly_divexact(a, b);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, std::string_view var)
      : text_(text), nvars_(nvars), var_(var) {}

  MultiPoly parse() {
    MultiPoly out(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out += parse_term() * Rat(sign);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      out += parse_term() * Rat(op == '-' ? -1 : 1);
      skip_ws();
    }
    return out;
  }

 private:
  MultiPoly parse_term() {
    Rat coeff(1);
    Exponent e(nvars_, 0);
    parse_factor(coeff, e);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      parse_factor(coeff, e);
      skip_ws();
    }
    return MultiPoly::monomial(e, coeff);
  }

  void parse_factor(Rat& coeff, Exponent& e) {
    skip_ws();
    if (at_end()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff *= parse_rat(text_.substr(start, pos_ - start));
      return;
    }
    if (text_.substr(pos_, var_.size()) != var_) fail("expected variable");
    pos_ += var_.size();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("missing variable index");
    std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (index == 0 || index > nvars_) fail("variable index out of range");
    int power = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::size_t ps = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ps == pos_) fail("missing exponent");
      power = std::stoi(std::string(text_.substr(ps, pos_ - ps)));
    }
    e[index - 1] += power;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, std::size_t nvars, std::string_view var) {
  return PolyParser(text, nvars, var).parse();
}

}  // namespace arrfree

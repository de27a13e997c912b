#include "arrfree/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace arrfree {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && arrfree::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({Rat(0), Rat(1)}); }

UniPoly UniPoly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const int> roots) {
  UniPoly p = constant(Rat(1));
  for (int r : roots) p = p * UniPoly({Rat(-r), Rat(1)});
  return p;
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  UniPoly out = *this;
  Rat lc = c_.back();
  for (auto& v : out.c_) v /= lc;
  return out;
}

int UniPoly::root_multiplicity(const Rat& r) const {
  if (is_zero()) throw std::logic_error("root multiplicity of zero polynomial");
  UniPoly lin({-r, Rat(1)});
  UniPoly cur = *this;
  int m = 0;
  while (true) {
    auto [q, rem] = divmod(cur, lin);
    if (!rem.is_zero()) break;
    cur = q;
    ++m;
  }
  return m;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (arrfree::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly r = constant(Rat(1));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (arrfree::is_zero(c)) continue;
    Rat mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << arrfree::to_string(mag);
      continue;
    }
    if (mag != 1) os << arrfree::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly(), a};
  std::vector<Rat> q(dq + 1, Rat(0));
  Rat lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rat f = rem[k + db] / lb;
    q[k] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace arrfree

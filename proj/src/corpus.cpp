#include "arrfree/corpus.hpp"

#include <charconv>
#include <random>
#include <vector>

#include "arrfree/matrix.hpp"
#include "arrfree/monomial_basis.hpp"

namespace arrfree {

namespace {

std::vector<Rat> unit(long l, long i) {
  std::vector<Rat> v(static_cast<std::size_t>(l), Rat(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::string diff_label(const std::string& a, const std::string& b) { return a + "-" + b; }

bool independent(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  return RatMatrix::from_rows(rows, cols).rank() == rows.size();
}

}  // namespace

Arrangement boolean_arrangement(long l) {
  if (l < 1) throw BadParams("boolean needs l >= 1");
  std::vector<std::vector<Rat>> normals;
  std::vector<std::string> labels;
  for (long i = 0; i < l; ++i) {
    normals.push_back(unit(l, i));
    labels.push_back("x" + std::to_string(i + 1));
  }
  return Arrangement(static_cast<std::size_t>(l), normals, labels);
}

Arrangement braid_arrangement(long n) {
  if (n < 2) throw BadParams("braid needs n >= 2");
  std::vector<std::vector<Rat>> normals;
  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      auto v = unit(n, i);
      v[static_cast<std::size_t>(j)] = -1;
      normals.push_back(v);
      labels.push_back(diff_label("x" + std::to_string(i + 1), "x" + std::to_string(j + 1)));
    }
  }
  return Arrangement(static_cast<std::size_t>(n), normals, labels);
}

Arrangement braid_essential_arrangement(long n) {
  if (n < 2) throw BadParams("braid_essential needs n >= 2");
  long l = n - 1;
  std::vector<std::vector<Rat>> normals;
  std::vector<std::string> labels;
  for (long i = 0; i < l; ++i) {
    normals.push_back(unit(l, i));
    labels.push_back("y" + std::to_string(i + 1));
  }
  for (long i = 0; i < l; ++i) {
    for (long j = i + 1; j < l; ++j) {
      auto v = unit(l, i);
      v[static_cast<std::size_t>(j)] = -1;
      normals.push_back(v);
      labels.push_back(diff_label("y" + std::to_string(i + 1), "y" + std::to_string(j + 1)));
    }
  }
  return Arrangement(static_cast<std::size_t>(l), normals, labels);
}

Arrangement generic_arrangement(long l, long m, std::uint32_t seed) {
  if (l < 1 || m < 0) throw BadParams("generic needs l >= 1 and m >= 0");
  if (l == 1 && m > 1) throw BadParams("generic with l = 1 admits at most one hyperplane");
  if (m > 64) throw BadParams("generic supports at most 64 hyperplanes");
  std::minstd_rand rng(seed == 0 ? 1 : seed);
  auto ul = static_cast<std::size_t>(l);
  std::vector<std::vector<Rat>> normals;
  std::vector<std::string> labels;
  const int max_attempts = 100000;
  for (long h = 0; h < m; ++h) {
    bool accepted = false;
    for (int attempt = 0; attempt < max_attempts && !accepted; ++attempt) {
      std::vector<Rat> cand(ul);
      for (auto& q : cand) q = static_cast<long>(rng() % 7) - 3;
      std::size_t k = normals.size();
      if (k + 1 <= ul) {
        auto rows = normals;
        rows.push_back(cand);
        accepted = independent(rows, ul);
      } else {
        accepted = true;
        for (const auto& sub : subsets(k, ul - 1)) {
          std::vector<std::vector<Rat>> rows;
          for (auto i : sub) rows.push_back(normals[i]);
          rows.push_back(cand);
          if (!independent(rows, ul)) {
            accepted = false;
            break;
          }
        }
      }
      if (accepted) normals.push_back(cand);
    }
    if (!accepted) throw BadParams("could not draw a generic hyperplane");
    labels.push_back("H" + std::to_string(h + 1));
  }
  return Arrangement(ul, normals, labels);
}

Arrangement corpus(std::string_view name, std::span<const long> params) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw BadParams("wrong number of parameters for " + std::string(name));
  };
  if (name == "boolean") {
    need(1, 1);
    return boolean_arrangement(params[0]);
  }
  if (name == "braid") {
    need(1, 1);
    return braid_arrangement(params[0]);
  }
  if (name == "braid_essential") {
    need(1, 1);
    return braid_essential_arrangement(params[0]);
  }
  if (name == "generic") {
    need(2, 3);
    long seed = params.size() == 3 ? params[2] : 1;
    if (seed < 0 || seed > 0x7fffffffL) throw BadParams("seed out of range");
    return generic_arrangement(params[0], params[1], static_cast<std::uint32_t>(seed));
  }
  throw BadParams("unknown corpus family '" + std::string(name) + "'");
}

Arrangement corpus_from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  std::vector<long> params;
  while (colon != std::string_view::npos) {
    spec = spec.substr(colon + 1);
    colon = spec.find(':');
    std::string_view tok = spec.substr(0, colon);
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw BadParams("bad corpus parameter '" + std::string(tok) + "'");
    params.push_back(v);
  }
  return corpus(name, params);
}

}  // namespace arrfree

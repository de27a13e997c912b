#include "arrfree/arrangement_io.hpp"

#include <fstream>
#include <sstream>

namespace arrfree {

Multiarrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("arrangement must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "dim" && key != "hyperplanes" && key != "multiplicities" && key != "labels")
      throw FormatError("unknown key '" + key + "'");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw FormatError("'dim' must be an integer");
  long long dim = j["dim"].get<long long>();
  if (dim < 1 || dim > 8) throw FormatError("'dim' must be between 1 and 8");
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
    throw FormatError("'hyperplanes' must be an array");

  std::vector<std::vector<Rat>> normals;
  for (const auto& row : j["hyperplanes"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw FormatError("each hyperplane must be an array of " + std::to_string(dim) + " rational strings");
    std::vector<Rat> v;
    for (const auto& c : row) {
      if (!c.is_string()) throw FormatError("coefficients must be rational strings");
      try {
        v.push_back(parse_rat(c.get<std::string>()));
      } catch (const ParseError& e) {
        throw FormatError(e.what());
      }
    }
    normals.push_back(std::move(v));
  }

  std::vector<int> mult;
  if (j.contains("multiplicities")) {
    const auto& m = j["multiplicities"];
    if (!m.is_array() || m.size() != normals.size())
      throw FormatError("'multiplicities' must have one entry per hyperplane");
    for (const auto& k : m) {
      if (!k.is_number_integer() || k.get<long long>() < 1 || k.get<long long>() > 1000)
        throw FormatError("multiplicities must be positive integers");
      mult.push_back(static_cast<int>(k.get<long long>()));
    }
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != normals.size())
      throw FormatError("'labels' must have one entry per hyperplane");
    for (const auto& s : l) {
      if (!s.is_string()) throw FormatError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  try {
    auto ma = Multiarrangement::from_raw(static_cast<std::size_t>(dim), normals, mult);
    if (!labels.empty() && ma.size() == normals.size()) {
      std::vector<std::vector<Rat>> canon;
      for (const auto& f : ma.base().hyperplanes()) canon.push_back(f.coeffs());
      return Multiarrangement(Arrangement(ma.dim(), canon, labels), ma.multiplicities());
    }
    return ma;
  } catch (const ArrangementError& e) {
    throw FormatError(e.what());
  }
}

Multiarrangement read_arrangement_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

nlohmann::ordered_json arrangement_to_json(const Multiarrangement& ma) {
  nlohmann::ordered_json j;
  j["dim"] = ma.dim();
  auto hs = nlohmann::ordered_json::array();
  for (const auto& f : ma.base().hyperplanes()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : f.coeffs()) row.push_back(to_string(c));
    hs.push_back(row);
  }
  j["hyperplanes"] = hs;
  j["multiplicities"] = ma.multiplicities();
  if (!ma.base().labels().empty()) j["labels"] = ma.base().labels();
  return j;
}

nlohmann::ordered_json arrangement_to_json(const Arrangement& arr) {
  return arrangement_to_json(Multiarrangement::simple(arr));
}

}  // namespace arrfree

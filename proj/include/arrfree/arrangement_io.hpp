#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "arrfree/arrangement.hpp"

namespace arrfree {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict reader for {"dim", "hyperplanes", "multiplicities"?, "labels"?}. Coefficients are
/// rational strings. Proportional duplicates merge into multiplicities.
Multiarrangement arrangement_from_json(const nlohmann::json& j);
Multiarrangement read_arrangement_file(const std::filesystem::path& path);

nlohmann::ordered_json arrangement_to_json(const Multiarrangement& ma);
nlohmann::ordered_json arrangement_to_json(const Arrangement& arr);

}  // namespace arrfree

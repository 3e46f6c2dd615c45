#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace alia {

/// First failing basis tuple of an identity check. Indices are 0-based here
/// and rendered 1-based.
struct Witness {
  std::vector<std::size_t> index;
  std::string value;
};

/// Outcome of an identity or axiom check.
struct Report {
  std::string check;
  bool pass = true;
  std::optional<Witness> witness;
  std::map<std::string, std::string> info;
  std::vector<Report> parts;

  static Report ok(std::string name) { return Report{std::move(name), true, {}, {}, {}}; }
  static Report failed(std::string name, Witness w) {
    return Report{std::move(name), false, std::move(w), {}, {}};
  }

  /// Conjunction of several independently runnable reports.
  static Report all_of(std::string name, std::vector<Report> parts);

  explicit operator bool() const { return pass; }

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace alia

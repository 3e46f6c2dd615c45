#pragma once

#include <string>

#include <json.hpp>

#include "alia/pre_alia.hpp"

namespace alia::demo {

struct Stage {
  std::string name;
  bool pass = true;
  /// Human-readable lines: tables, goldens and diffs.
  std::vector<std::string> lines;
};

struct Result {
  bool pass = true;
  std::vector<Stage> stages;
  std::string text() const;
  nlohmann::json to_json() const;
};

/// Runs the pipeline from a two-dimensional pre-table: sub-adjacent algebra,
/// double d, canonical r, Al(r), delta_r, bialgebra and Manin triple checks.
/// Every stage is compared against frozen goldens; `pass` is their conjunction.
/// Hand-expanded reference sums for delta(e1), delta(e2) are reported for comparison only.
Result run_sample(const PreAlgebraTable& p);

/// Basis labels e1..en, e1*..en* for a double of dimension 2n.
std::vector<std::string> double_basis_names(std::size_t n);

}  // namespace alia::demo

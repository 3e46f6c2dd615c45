#include "alia/report.hpp"

#include <sstream>

namespace alia {

namespace {

std::string render_index(const std::vector<std::size_t>& index) {
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(index[i] + 1);
  }
  return out + ")";
}

void write_text(const Report& r, std::ostringstream& os, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << r.check << ": " << (r.pass ? "PASS" : "FAIL");
  if (r.witness) {
    if (!r.witness->index.empty()) os << " at " << render_index(r.witness->index);
    os << ": " << r.witness->value;
  }
  os << "\n";
  for (const auto& [k, v] : r.info) os << pad << "  " << k << " = " << v << "\n";
  for (const auto& p : r.parts) write_text(p, os, depth + 1);
}

}  // namespace

Report Report::all_of(std::string name, std::vector<Report> parts) {
  Report r = ok(std::move(name));
  for (const auto& p : parts) r.pass = r.pass && p.pass;
  r.parts = std::move(parts);
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  write_text(*this, os, 0);
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["pass"] = pass;
  if (witness) {
    std::vector<std::size_t> one_based;
    for (auto i : witness->index) one_based.push_back(i + 1);
    j["witness"] = {{"index", one_based}, {"value", witness->value}};
  }
  if (!info.empty()) j["info"] = info;
  if (!parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : parts) j["parts"].push_back(p.to_json());
  }
  return j;
}

}  // namespace alia

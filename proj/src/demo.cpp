#include "alia/demo.hpp"

#include <sstream>

#include "alia/errors.hpp"
#include "alia/fixtures.hpp"

namespace alia::demo {

namespace {

using Entry = std::tuple<std::size_t, std::size_t, Scalar>;

Tensor2 tensor_from(std::size_t n, std::initializer_list<Entry> entries) {
  Tensor2 t(n);
  for (const auto& [i, j, v] : entries) t(i, j) = v;
  return t;
}

// Nonzero brackets of d as printed, basis e1, e2, e1*, e2* = 0..3.
AlgebraTable golden_double() {
  AlgebraTable d(4);
  d(0, 1, 0) = 1;
  d(1, 0, 0) = -1;
  d(0, 2, 3) = -2;
  d(1, 3, 3) = -2;
  d(1, 2, 2) = -1;
  d(1, 2, 3) = -1;
  d(2, 0, 3) = -4;
  d(2, 1, 2) = -2;
  d(2, 1, 3) = -2;
  d(3, 1, 3) = -4;
  return d;
}

// delta_r frozen from an independent brute-force expansion.
std::vector<Tensor2> golden_delta() {
  return {
      tensor_from(4, {{0, 3, -2}, {3, 0, -1}}),
      tensor_from(4, {{0, 2, -4}, {0, 3, -2}, {1, 3, -4}, {2, 0, -2}, {3, 0, -1}, {3, 1, -2}}),
      tensor_from(4, {{2, 3, 1}, {3, 2, -1}}),
      Tensor2(4),
  };
}

// Hand-expanded reference sums for delta(e1), delta(e2), collected term by term.
std::vector<Tensor2> displayed_delta() {
  return {
      tensor_from(4, {{3, 0, -4 + 2 + 1}, {0, 3, 4 + 2}}),
      tensor_from(4, {{2, 0, -3}, {3, 0, -2}, {0, 2, -4}, {0, 3, -2}, {3, 1, -2}, {1, 3, -4}}),
  };
}

void table_diff(Stage& s, const AlgebraTable& got, const AlgebraTable& want,
                const std::vector<std::string>& names, const std::string& suffix) {
  for (std::size_t i = 0; i < got.dim(); ++i)
    for (std::size_t j = 0; j < got.dim(); ++j) {
      Vector g = got.product(i, j);
      Vector w = want.product(i, j);
      if (g != w) {
        s.pass = false;
        s.lines.push_back("DIFF [" + names[i] + "," + names[j] + "]: got " + format_vector(g, names) +
                          ", expected " + format_vector(w, names));
      } else if (!is_zero(g)) {
        s.lines.push_back("[" + names[i] + "," + names[j] + "]" + suffix + " = " +
                          format_vector(g, names));
      }
    }
}

Stage report_stage(const std::string& name, const Report& r) {
  Stage s{name, r.pass, {}};
  std::istringstream in(r.to_text());
  for (std::string line; std::getline(in, line);) s.lines.push_back(line);
  return s;
}

}  // namespace

std::vector<std::string> double_basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i) + "*");
  return names;
}

Result run_sample(const PreAlgebraTable& p) {
  Result res;
  auto add = [&res](Stage s) {
    res.pass = res.pass && s.pass;
    res.stages.push_back(std::move(s));
  };
  const auto names = double_basis_names(2);
  const std::vector<std::string> half(names.begin(), names.begin() + 2);

  if (p.dim() != 2) throw DimensionError("the demo pipeline expects a two-dimensional pre-table");
  Report pre = check_pre_left_alia(p);
  add(report_stage("pre-left-alia", pre));
  if (!pre.pass) return res;

  Stage sub{"sub-adjacent", true, {}};
  table_diff(sub, sub_adjacent(p), fixtures::sample_subadjacent(), half, "");
  add(std::move(sub));

  LiftedSolution sol;
  try {
    sol = canonical_solution(p);
  } catch (const Error& e) {
    add(Stage{"double", false, {e.what()}});
    return res;
  }
  Stage dstage{"double", true, {}};
  table_diff(dstage, sol.d, golden_double(), names, "_d");
  add(std::move(dstage));

  Stage rstage{"canonical-r", is_antisymmetric(sol.r), {"r = " + format_tensor(sol.r, names)}};
  if (!rstage.pass) rstage.lines.push_back("r is not antisymmetric");
  add(std::move(rstage));

  Report ybe = check_ybe(sol.d, sol.r);
  Stage ystage = report_stage("ybe", ybe);
  ystage.lines.push_back("Al(r) entries checked: " + std::to_string(sol.d.dim() * sol.d.dim() * sol.d.dim()));
  add(std::move(ystage));

  Comultiplication delta = delta_from_r(sol.d, sol.r);
  Stage delta_stage{"delta", true, {}};
  const auto golden = golden_delta();
  const auto shown = displayed_delta();
  for (std::size_t k = 0; k < 4; ++k) {
    std::string label = "delta(" + names[k] + ")";
    if (delta[k] == golden[k]) {
      delta_stage.lines.push_back(label + " = " + format_tensor(delta[k], names));
    } else {
      delta_stage.pass = false;
      delta_stage.lines.push_back("DIFF " + label + ": got " + format_tensor(delta[k], names) +
                                  ", expected " + format_tensor(golden[k], names));
    }
    if (k < shown.size()) {
      bool agree = delta[k] == shown[k];
      delta_stage.lines.push_back("  reference display " + format_tensor(shown[k], names) +
                                  (agree ? " (agrees)" : " (differs from the computed value)"));
    }
  }
  add(std::move(delta_stage));

  if (!ybe.pass || !is_antisymmetric(sol.r)) return res;
  TriangularBialgebra tri;
  try {
    tri = triangular_bialgebra(sol.d, sol.r);
  } catch (const Error& e) {
    add(Stage{"bialgebra", false, {e.what()}});
    return res;
  }
  add(report_stage("bialgebra", check_bialgebra(sol.d, tri.delta)));
  AlgebraTable dd = double_bracket(sol.d, tri.dual);
  add(report_stage("manin", check_manin_triple(sol.d, tri.dual, dd)));
  return res;
}

std::string Result::text() const {
  std::ostringstream os;
  for (const auto& s : stages) {
    os << "== " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& l : s.lines) os << "   " << l << "\n";
  }
  os << "demo: " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json Result::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["stages"] = nlohmann::json::array();
  for (const auto& s : stages) j["stages"].push_back({{"name", s.name}, {"pass", s.pass}, {"lines", s.lines}});
  return j;
}

}  // namespace alia::demo

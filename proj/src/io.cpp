#include "alia/io.hpp"

#include <cstdint>
#include <fstream>
#include <set>

#include "alia/errors.hpp"

namespace alia::io {

namespace {

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ParseError("unknown field \"" + k + "\"");
  for (const char* r : required)
    if (!j.contains(r)) throw ParseError(std::string("missing field \"") + r + "\"");
}

void check_header(const json& j, const std::string& kind) {
  if (kind_of(j) != kind) throw ParseError("expected kind \"" + kind + "\", got \"" + kind_of(j) + "\"");
}

bool is_nonnegative_integer(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::size_t read_size(const json& j, const char* what) {
  if (!is_nonnegative_integer(j)) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t read_index(const json& j, std::size_t bound) {
  if (!is_nonnegative_integer(j)) throw ParseError("indices must be positive integers");
  auto i = j.get<std::size_t>();
  if (i < 1 || i > bound)
    throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
  return i - 1;
}

Scalar read_scalar(const json& j) {
  if (!j.is_string()) throw ParseError("rationals must be strings like \"p/q\"");
  return Scalar::parse(j.get<std::string>());
}

// Reads [[i1,...,ik,"p/q"], ...] and calls put(indices, value) once per tuple.
template <class Put>
void read_entries(const json& entries, const std::vector<std::size_t>& bounds, Put put) {
  if (!entries.is_array()) throw ParseError("entries must be an array");
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != bounds.size() + 1)
      throw ParseError("each entry must have " + std::to_string(bounds.size()) +
                       " indices and a value");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(read_index(e[k], bounds[k]));
    if (!seen.insert(idx).second) throw ParseError("duplicate entry");
    put(idx, read_scalar(e.back()));
  }
}

json entry(std::initializer_list<std::size_t> idx, const Scalar& v) {
  json e = json::array();
  for (auto i : idx) e.push_back(i + 1);
  e.push_back(v.str());
  return e;
}

json header(const char* kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

json table_entries(const Tensor3& c) {
  json out = json::array();
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) out.push_back(entry({i, j, k}, c(i, j, k)));
  return out;
}

Tensor3 read_table(const json& entries, std::size_t n) {
  Tensor3 c(n);
  read_entries(entries, {n, n, n}, [&](const auto& idx, const Scalar& v) { c(idx[0], idx[1], idx[2]) = v; });
  return c;
}

json matrix_entries(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back(entry({i, j}, m(i, j)));
  return out;
}

Matrix read_matrix(const json& entries, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  read_entries(entries, {rows, cols}, [&](const auto& idx, const Scalar& v) { m(idx[0], idx[1]) = v; });
  return m;
}

std::pair<std::size_t, std::size_t> read_dims(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("dims must be [rows, cols]");
  return {read_size(j[0], "dims"), read_size(j[1], "dims")};
}

std::string read_name(const json& j) {
  if (!j.contains("name")) return {};
  if (!j["name"].is_string()) throw ParseError("name must be a string");
  return j["name"].get<std::string>();
}

}  // namespace

std::string kind_of(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchema)
    throw ParseError(std::string("schema must be \"") + kSchema + "\"");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
  return j["kind"].get<std::string>();
}

json to_json(const AlgebraTable& a) {
  json j = header("algebra");
  if (!a.name().empty()) j["name"] = a.name();
  j["dim"] = a.dim();
  j["entries"] = table_entries(a.constants());
  return j;
}

AlgebraTable algebra_from_json(const json& j) {
  check_header(j, "algebra");
  check_fields(j, {"schema", "kind", "name", "dim", "entries"}, {"dim", "entries"});
  std::size_t n = read_size(j["dim"], "dim");
  return AlgebraTable(read_table(j["entries"], n), read_name(j));
}

json to_json(const PreAlgebraTable& p) {
  json j = header("pre-algebra");
  if (!p.name().empty()) j["name"] = p.name();
  j["dim"] = p.dim();
  j["entries"] = {{"succ", table_entries(p.succ().constants())},
                  {"prec", table_entries(p.prec().constants())}};
  return j;
}

PreAlgebraTable pre_algebra_from_json(const json& j) {
  check_header(j, "pre-algebra");
  check_fields(j, {"schema", "kind", "name", "dim", "entries"}, {"dim", "entries"});
  std::size_t n = read_size(j["dim"], "dim");
  const json& e = j["entries"];
  check_fields(e, {"succ", "prec"}, {"succ", "prec"});
  return PreAlgebraTable(AlgebraTable(read_table(e["succ"], n)), AlgebraTable(read_table(e["prec"], n)),
                         read_name(j));
}

json to_json(const Representation& rep) {
  json j = header("representation");
  j["dim"] = rep.base().dim();
  j["moduleDim"] = rep.module_dim();
  j["algebra"] = to_json(rep.base());
  json l = json::array();
  json r = json::array();
  const std::size_t m = rep.module_dim();
  for (std::size_t i = 0; i < rep.base().dim(); ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (!rep.l()[i](a, b).is_zero()) l.push_back(entry({i, a, b}, rep.l()[i](a, b)));
        if (!rep.r()[i](a, b).is_zero()) r.push_back(entry({i, a, b}, rep.r()[i](a, b)));
      }
  j["entries"] = {{"l", l}, {"r", r}};
  return j;
}

Representation representation_from_json(const json& j) {
  check_header(j, "representation");
  check_fields(j, {"schema", "kind", "dim", "moduleDim", "algebra", "entries"},
               {"dim", "moduleDim", "algebra", "entries"});
  std::size_t n = read_size(j["dim"], "dim");
  std::size_t m = read_size(j["moduleDim"], "moduleDim");
  AlgebraTable a = algebra_from_json(j["algebra"]);
  if (a.dim() != n) throw ParseError("dim differs from the nested algebra's dim");
  const json& e = j["entries"];
  check_fields(e, {"l", "r"}, {"l", "r"});
  std::vector<Matrix> l(n, Matrix(m, m));
  std::vector<Matrix> r(n, Matrix(m, m));
  read_entries(e["l"], {n, m, m}, [&](const auto& idx, const Scalar& v) { l[idx[0]](idx[1], idx[2]) = v; });
  read_entries(e["r"], {n, m, m}, [&](const auto& idx, const Scalar& v) { r[idx[0]](idx[1], idx[2]) = v; });
  return Representation(std::move(a), m, std::move(l), std::move(r));
}

json to_json(const Tensor2& t) {
  json j = header("tensor2");
  j["dims"] = {t.dim_left(), t.dim_right()};
  json e = json::array();
  for (std::size_t i = 0; i < t.dim_left(); ++i)
    for (std::size_t k = 0; k < t.dim_right(); ++k)
      if (!t(i, k).is_zero()) e.push_back(entry({i, k}, t(i, k)));
  j["entries"] = e;
  return j;
}

Tensor2 tensor2_from_json(const json& j) {
  check_header(j, "tensor2");
  check_fields(j, {"schema", "kind", "dims", "entries"}, {"dims", "entries"});
  auto [n, m] = read_dims(j["dims"]);
  Tensor2 t(n, m);
  read_entries(j["entries"], {n, m}, [&](const auto& idx, const Scalar& v) { t(idx[0], idx[1]) = v; });
  return t;
}

json to_json(const Comultiplication& delta) {
  json j = header("comultiplication");
  j["dim"] = delta.dim();
  json e = json::array();
  for (std::size_t k = 0; k < delta.dim(); ++k)
    for (std::size_t i = 0; i < delta.dim(); ++i)
      for (std::size_t l = 0; l < delta.dim(); ++l)
        if (!delta[k](i, l).is_zero()) e.push_back(entry({k, i, l}, delta[k](i, l)));
  j["entries"] = e;
  return j;
}

Comultiplication comultiplication_from_json(const json& j) {
  check_header(j, "comultiplication");
  check_fields(j, {"schema", "kind", "dim", "entries"}, {"dim", "entries"});
  std::size_t n = read_size(j["dim"], "dim");
  Comultiplication delta(n);
  read_entries(j["entries"], {n, n, n},
               [&](const auto& idx, const Scalar& v) { delta[idx[0]](idx[1], idx[2]) = v; });
  return delta;
}

json to_json(const BilinearForm& form) {
  json j = header("form");
  j["dim"] = form.dim();
  j["entries"] = matrix_entries(form.matrix());
  return j;
}

BilinearForm form_from_json(const json& j) {
  check_header(j, "form");
  check_fields(j, {"schema", "kind", "dim", "entries"}, {"dim", "entries"});
  std::size_t n = read_size(j["dim"], "dim");
  return BilinearForm(read_matrix(j["entries"], n, n));
}

json to_json(const Matrix& m) {
  json j = header("linear-map");
  j["dims"] = {m.rows(), m.cols()};
  j["entries"] = matrix_entries(m);
  return j;
}

Matrix linear_map_from_json(const json& j) {
  check_header(j, "linear-map");
  check_fields(j, {"schema", "kind", "dims", "entries"}, {"dims", "entries"});
  auto [rows, cols] = read_dims(j["dims"]);
  return read_matrix(j["entries"], rows, cols);
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error("failed writing " + path);
}

}  // namespace alia::io

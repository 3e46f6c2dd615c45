#pragma once

#include <string>

#include <json.hpp>

#include "alia/bialgebra.hpp"
#include "alia/pre_alia.hpp"
#include "alia/representation.hpp"

namespace alia::io {

using nlohmann::json;

inline constexpr const char* kSchema = "alia/1";

// Every reader throws ParseError on a wrong schema or kind, unknown fields,
// out-of-range (1-based) indices, duplicate entries or malformed rationals.

json to_json(const AlgebraTable& a);
json to_json(const PreAlgebraTable& p);
json to_json(const Representation& rep);
json to_json(const Tensor2& t);
json to_json(const Comultiplication& delta);
json to_json(const BilinearForm& form);
/// kind "linear-map" with dims [rows, cols].
json to_json(const Matrix& m);

AlgebraTable algebra_from_json(const json& j);
PreAlgebraTable pre_algebra_from_json(const json& j);
Representation representation_from_json(const json& j);
Tensor2 tensor2_from_json(const json& j);
Comultiplication comultiplication_from_json(const json& j);
BilinearForm form_from_json(const json& j);
Matrix linear_map_from_json(const json& j);

/// The document's "kind" field, validated against the schema.
std::string kind_of(const json& j);

/// Throws ParseError when the file is missing or is not JSON.
json read_file(const std::string& path);
/// Pretty-printed with a trailing newline. Throws Error when unwritable.
void write_file(const std::string& path, const json& j);

}  // namespace alia::io

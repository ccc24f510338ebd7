#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "crig/euler.hpp"
#include "crig/finite_group.hpp"
#include "crig/representation.hpp"
#include "crig/rotation.hpp"

namespace crig {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump_json(const Json& j);

/// Generator tables that Word-variant maps may refer to, by id.
using TableRegistry = std::map<std::string, std::shared_ptr<const GeneratorTable>>;

Json to_json(const CircleHomeo& f);
/// Throws InputError on malformed input or an unknown table id.
CircleHomeo homeo_from_json(const Json& j, const TableRegistry& tables = {});

Json to_json(const CertifiedInterval& v);
CertifiedInterval interval_from_json(const Json& j);

Json to_json(const OrbifoldSignature& sig);
/// Accepts {"genus", "periods"} or a string such as "(0;3,3,4)".
OrbifoldSignature signature_from_json(const Json& j);

Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j, const TableRegistry& tables = {});

Json to_json(const FiniteGroupHom& hom);
/// {"target": "dihedral:8" | "sl2f3" | "cyclic:N", "images": {generator: element}}
FiniteGroupHom hom_from_json(const Json& j, const OrbifoldSignature& sig);

Json to_json(const PantsDecomposition& pants, const FinitePresentation& pres);
PantsDecomposition pants_from_json(const Json& j, const FinitePresentation& pres);

}  // namespace crig

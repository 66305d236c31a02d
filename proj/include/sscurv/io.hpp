#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sscurv/geometry.hpp"
#include "sscurv/probe.hpp"
#include "sscurv/soliton.hpp"

namespace sscurv {

using Json = nlohmann::json;

/// A geometry file after parsing: the spec, an optional embedded jet, and
/// normalization notes (e.g. antisymmetric completion of brackets).
struct ParsedGeometry {
  GeometrySpec spec;
  std::optional<ScalarJet> jet;
  std::vector<std::string> notes;
};

/// Parses the geometry schema:
///   {"name": str, "label": str?, "dim": int?,
///    "structure_constants": [{"i","j","k" (1-based), "value": "p/q"}],
///    "metric": n x n, "xi": n, "jet": {"d": n, "dd": n x n}?}
/// Rationals are strings "p/q" (plain integers are also accepted).
/// Throws InputError with line or field diagnostics. `source` names the input in messages.
ParsedGeometry parse_geometry(std::string_view text, std::string_view source = "<input>");
ParsedGeometry parse_geometry_file(const std::filesystem::path& path);

/// {"d": [...], "dd": [[...]]}, either bare or under a "jet" key.
ScalarJet parse_jet(std::string_view text, int dim, std::string_view source = "<input>");
ScalarJet parse_jet_file(const std::filesystem::path& path, int dim);

/// Canonical geometry document; only i < j structure constants are written.
Json geometry_to_json(const GeometrySpec& spec);
Json jet_to_json(const ScalarJet& jet);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& field);

/// {"valence": [p, q], "dim": n, "components": [...]} in row-major order.
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j, const std::string& field);

Json probe_to_json(const ProbeResult& p);
ProbeResult probe_from_json(const Json& j);

Json validation_to_json(const ValidationReport& v);
ValidationReport validation_from_json(const Json& j);

Json soliton_to_json(const SolitonVerdict& v);
SolitonVerdict soliton_from_json(const Json& j);

std::string read_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace sscurv

#pragma once

#include <filesystem>

#include <json.hpp>

#include "monogenica/monogenic.hpp"
#include "monogenica/pde.hpp"

namespace monogenica::io {

using json = nlohmann::json;

/// [re, im] pair, or a bare real number.
Complex complex_from_json(const json& j);
json complex_to_json(Complex z);

/// {"n", "m", "upsilon": [[r, s, k, re, im], ...], "u_map": {"s": u}}. No validation.
AlgebraSpec algebra_from_json(const json& j);
json algebra_to_json(const AlgebraSpec& alg);

/// Parses and validates; InvalidSpec carries the full report.
AlgebraSpec load_algebra_file(const std::filesystem::path& path);
AlgebraSpec checked_algebra(const json& j);

/// {"a": [[re,im],...], "b": [[re,im],...]}
TriadSpec triad_from_json(const json& j);
json triad_to_json(const TriadSpec& triad);

/// {"kind": "exp"|"sin"|"cos"|"poly"|"series", "coeffs", "scale", "shift",
///  "center", "radius", "amplitude"}; "scale" and "shift" act on the argument.
HoloFn holo_from_json(const json& j);
json holo_to_json(const HoloFn& f);

/// {"N": int, "terms": [[alpha, beta, gamma, C], ...]}
PdeSpec pde_from_json(const json& j);

/// {"algebra": <path or inline>, "triad", "F", "G"}. Relative algebra paths are
/// resolved against base_dir first, then against MONOGENICA_FIXTURES. Missing
/// G entries default to the zero function when the key is absent.
MonogenicSpec monogenic_from_json(const json& j, const std::filesystem::path& base_dir,
                                  bool validate_algebra_spec = true);

json read_json_file(const std::filesystem::path& path);

/// Locates `name` relative to base_dir, then MONOGENICA_FIXTURES.
std::filesystem::path resolve_path(const std::string& name, const std::filesystem::path& base_dir);

}  // namespace monogenica::io

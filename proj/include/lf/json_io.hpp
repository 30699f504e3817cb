#pragma once

#include <string>

#include "json.hpp"  // vendored nlohmann single header
#include "lf/norms.hpp"

namespace lf {

using Json = nlohmann::ordered_json;

// Decimal with 17 significant digits: enough to round-trip any double, and a
// fixed format so repeated runs serialize byte-identically.
std::string format_double(double x);

// Deterministic serializer: insertion-ordered keys, format_double for floats.
// indent < 0 emits the compact form.
std::string dump_json(const Json& j, int indent = -1);

// {"family": ..., "dim": ..., "params": {...}}; unknown fields are rejected.
NormSpec parse_norm_spec(const Json& j);
NormSpec load_norm_spec(const std::string& path);
Json norm_spec_json(const NormSpec& spec);

Json parse_json_text(const std::string& text);  // wraps parse errors
Json load_json_file(const std::string& path);

}  // namespace lf

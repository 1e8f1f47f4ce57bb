#pragma once

#include <json.hpp>
#include <string>

#include "mensura/cli.hpp"

namespace mensura::cli {

using Json = nlohmann::ordered_json;

/// {coefficient: {num, den}, radicand, decimal}; integers as strings.
Json exact_json(const ExactScalar& value, int digits);
Json value_json(const ManifestValue& value, int digits);
Json config_json(const RunConfig& config);

/// "30√22 ≈ 140.71…" for irrational values, the plain rational otherwise.
std::string exact_text(const ExactScalar& value, int digits);
std::string value_text(const ManifestValue& value, int digits);

std::string format_name(OutputFormat format);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& document);

}  // namespace mensura::cli

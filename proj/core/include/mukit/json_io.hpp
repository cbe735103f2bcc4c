#pragma once

#include <json.hpp>

#include "mukit/measure.hpp"
#include "mukit/quantum.hpp"
#include "mukit/spaces.hpp"

namespace mukit::io {

using nlohmann::json;

/// Serializes with every number printed to 17 significant digits, which
/// round-trips IEEE doubles exactly.
std::string dump(const json& j, int indent = -1);

json to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// {"family": string, "p": number?, "a": [number]?, "dim": int}
json to_json(const spaces::SetDescriptor& d);
spaces::SetDescriptor set_from_json(const json& j);

/// {"atoms": [[number]], "weights": [number]}
json to_json(const measures::FiniteMeasure& mu);
measures::FiniteMeasure measure_from_json(const json& j);

/// Complex matrices serialize as [[[re, im], ...], ...].
json to_json(const quantum::CMatrix& m);
quantum::CMatrix cmatrix_from_json(const json& j);

}  // namespace mukit::io

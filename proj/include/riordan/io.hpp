#pragma once

#include <json.hpp>

#include <string>

#include "riordan/compress.hpp"
#include "riordan/double_riordan.hpp"
#include "riordan/eco.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"
#include "riordan/tp.hpp"

namespace riordan {

using Json = nlohmann::json;

// {"trunc": N, "parity": "even"|"odd"|"none", "coeffs": ["p/q", ...]}
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

// Lower-triangular form {"n": N, "entries": [["p/q"], ["p/q","p/q"], ...]}
// (ragged rows). Non-triangular matrices (production matrices) use
// {"rows": R, "cols": C, "dense": [[...], ...]}; the reader accepts both.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// Dense CSV with empty cells above the diagonal.
std::string mat_to_csv(const Mat& m);

// Spec inputs are expression strings: {"b": "...", "g": "...",
// "f1": "...", "f2": "..."}; evaluated at the caller's truncation.
DoubleAlmostSpec dar_spec_from_json(const Json& j, int trunc);
// Compressed variant carries "compressed": true.
CompressedSpec compressed_spec_from_json(const Json& j, int trunc);

Json tp_report_to_json(const TPReport& rep);

// {"axiom": 0, "productions": {"0": [0,1], ...}, "window": 64}
SuccessionRule rule_from_json(const Json& j);

}  // namespace riordan

/// @file jsonio.hpp
/// @brief JSON encodings for ring specs and matrices.
///
/// Matrix format: { "ring": {...}, "rows": r, "cols": c,
///                  "entries": [[scalar-string, ...], ...] }.
/// The "ring" object is {"kind":"rational"} | {"kind":"fp","modulus":"p"} |
/// {"kind":"symbolic","vars":[names]}. A matrix without a "ring" key is read
/// against a caller-supplied default.
#pragma once

#include <json.hpp>

#include "sclab/matrix.hpp"

namespace sclab {

nlohmann::json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j, const RingSpec* default_ring = nullptr);

}  // namespace sclab

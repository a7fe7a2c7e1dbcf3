#pragma once

#include <filesystem>

#include "calab/normed/space.hpp"
#include "json.hpp"

namespace calab::normed {

// {"space": {"kind": "lp"|"sup"|"matrix", "p": number|"inf", "dim": n,
//            "field": "real"|"complex"},
//  "vectors": [[...], ...], "labels": [...]}
// Complex entries are [re, im] pairs; real entries are plain numbers. Matrix
// vectors are either flat row-major arrays or nested rows.
FiniteNormedSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const FiniteNormedSpace& space);

VectorFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const VectorFamily& family);

VectorFamily load_family(const std::filesystem::path& path);

}  // namespace calab::normed

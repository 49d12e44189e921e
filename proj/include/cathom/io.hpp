#pragma once

#include <string>

#include "cathom/fincat.hpp"
#include "json.hpp"

namespace cathom {

RawCategory raw_from_json(const nlohmann::json& j);
nlohmann::json raw_to_json(const RawCategory& raw);

FinCatPtr load_category(const std::string& path);
// Canonical serialization (sorted ids, identity composites omitted).
nlohmann::json category_to_json(const FinCat& c);

// Functor file: {"source": <file>, "target": <file>, "obj_map": {...},
// "mor_map": {...}}. Paths are resolved relative to the functor file.
Functor load_functor(const std::string& path);
Functor functor_from_json(const nlohmann::json& j, const FinCatPtr& src, const FinCatPtr& tgt);
nlohmann::json functor_to_json(const Functor& f);

}  // namespace cathom

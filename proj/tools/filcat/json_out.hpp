#pragma once

#include <nlohmann/json.hpp>

#include "filcat/closedcat.hpp"
#include "filcat/laws.hpp"

// JSON views of library values. Object keys are sorted, so output is canonical.
namespace filcat::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

json to_json(const Atom& a);
json to_json(const GroundSet& s);
json to_json(const Subset& x);
json to_json(const Filter& F);
json to_json(const PartialFn& f);
json to_json(const FilArrow& a);
json to_json(const LawReport& r, bool timings);

}  // namespace filcat::cli

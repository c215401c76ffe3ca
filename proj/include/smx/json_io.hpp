#pragma once

#include <string>

#include <json.hpp>

#include "smx/axioms.hpp"
#include "smx/value.hpp"

namespace smx {

// Values serialize as {"set": [...]} with elements in canonical order, or
// {"matrix": {"rows": m, "cols": n, "entries": [...]}} with row-major
// entries. Serializing never emits a 1x1 matrix; deserializing accepts one
// and collapses it, and re-canonicalizes unordered or duplicated set
// elements, so serialize(deserialize(j)) is a fixed point on valid input.
nlohmann::json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);

// Convenience wrappers over compact single-line text.
std::string value_to_json_text(const Value& v);
Value value_from_json_text(const std::string& text);

// Machine-readable axiom report: bounds, universe size, one record per
// axiom with hyphenated verdicts, and the overall flag.
nlohmann::json report_to_json(const AxiomReport& report);

}  // namespace smx

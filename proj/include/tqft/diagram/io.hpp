#pragma once

#include "tqft/category/io.hpp"
#include "tqft/diagram/sliced.hpp"

namespace tqft {

// {"top": [[label, "up"|"down"], ...],
//  "slices": [[{"gen": "cup", "label": "tau", "pos": 0}, ...], ...]}
// Labels are names or indices (names need the category). A generator may
// carry "component": <name> instead of a label; each component becomes a slot.
// An optional "components" list fixes the slot order.
SlicedDiagram diagram_from_json(const json& j, const PremodularData* c);
json diagram_to_json(const SlicedDiagram& d, const PremodularData* c);

}  // namespace tqft

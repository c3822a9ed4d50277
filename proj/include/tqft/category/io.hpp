#pragma once

#include <string>

#include "json.hpp"
#include "tqft/category/premodular.hpp"

namespace tqft {

using json = nlohmann::json;

// {"N": 20, "coeffs": ["1/2", "0", ...]}; integers and rational strings are
// also accepted on input.
json scalar_to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const json& j);  // throws ParseError

// Category documents. Labels may be referenced by index or by name.
PremodularData category_from_json(const json& j);  // raw, not finalized
json category_to_json(const PremodularData& c);

json read_json_file(const std::string& path);  // throws ParseError (also for I/O)

// A built-in name or a path to a category file; the result is finalized.
CategoryPtr resolve_category(const std::string& selector);

}  // namespace tqft

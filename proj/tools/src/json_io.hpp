#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "primcover/actions.hpp"
#include "primcover/covers.hpp"
#include "primcover/lattice.hpp"
#include "primcover/verify.hpp"

namespace primcover::cli {

using json = nlohmann::ordered_json;

/// {"degree": n, "generators": ["(1,2)", ...]}. `degree` may be omitted when
/// `fallback_degree` is nonzero.
PermGroup group_from_json(const json& j, std::size_t fallback_degree = 0);

/// {"degree": n, "group": {...}, "branches": ["(1,2)", ...]}, validated.
MonodromyTuple tuple_from_json(const json& j);

json load_json_file(const std::string& path);

json to_json(const GenusReport& r);
json to_json(const ActionElementReport& r);
/// `maximal_in` uses the tags "S_n" and "A_n".
json to_json(const SubgroupClass& c, bool alternating_parent);
json to_json(const Table1Row& r);
json to_json(const VerifyReport& r);
json to_json(const MonodromyTuple& t);

}  // namespace primcover::cli

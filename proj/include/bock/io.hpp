#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bock/abelian.hpp"
#include "bock/basis.hpp"
#include "bock/dimension.hpp"
#include "bock/homology.hpp"
#include "bock/nilpotent.hpp"

namespace bock {

using json = nlohmann::json;

/// Reads and parses a JSON file; throws Parse with the path in the message.
json load_json(const std::filesystem::path& path);

PrimeSet primeset_from_json(const json& j);
json to_json(const PrimeSet& s);

/// {"type":"abelian","atoms":[{"kind":"Z","mult":1}, {"kind":"cyclic","p":2,"k":3}, ...]}
AbelianGroup abelian_from_json(const json& j);
json to_json(const AbelianGroup& g);

/// Any group document: abelian, tower (inline or {"name":...}), or finite
/// ({"name":...} or {"table":[[...]]}).
NilpotentGroupDesc group_from_json(const json& j);
json to_json(const Tower& t);

/// {"q":1,"zp":{"default":1,"overrides":{"2":2}},...}; "inf" is infinity.
DimensionProfile profile_from_json(const json& j);
json to_json(const DimensionProfile& d);
json to_json(ExtNat v);

json to_json(const BocksteinBasis& b);
json to_json(const Violation& v);
json to_json(const HomologyReport& r);

}  // namespace bock

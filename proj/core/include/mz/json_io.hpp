#pragma once

#include <nlohmann/json.hpp>

#include "mz/classify.hpp"
#include "mz/momentsym.hpp"
#include "mz/witness.hpp"

namespace mz {

using Json = nlohmann::ordered_json;

// Rationals cross the boundary as "num/den" strings, never as floats.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json difference_to_json(const DifferenceOp& d);
DifferenceOp difference_from_json(const Json& j);

Json geometric_to_json(const GeometricDifference& g);
GeometricDifference geometric_from_json(const Json& j);

Json rootset_to_json(const RootSet& rs);
Json verdict_to_json(const Verdict& v);
Json grid_to_json(const GridFunction& f);
Json decay_to_json(const DecayReport& r);
Json alternating_to_json(const AlternatingSystem& s);
Json node_family_to_json(const NodeFamilyReport& r);

} // namespace mz

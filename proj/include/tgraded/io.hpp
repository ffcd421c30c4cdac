#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tgraded/pgeodesic.hpp"
#include "tgraded/structure.hpp"
#include "tgraded/universal.hpp"

namespace tgraded::io {

using json = nlohmann::json;

// Rationals are strings "n/d"; bare integers are accepted on input.
json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

// Coordinates as ["n/d", ...]; tree words as [[branch, "n/d"], ...].
json to_json(const PiecePoint& x);
PiecePoint point_from_json(const json& j, const Piece& piece);

json to_json(const PieceFamily& family);
PieceFamily family_from_json(const json& j);

json to_json(const PGeodesic& g);
PGeodesic pgeodesic_from_json(const json& j, const PieceFamily& family);

json to_json(const UPoint& f);
UPoint upoint_from_json(const json& j, const PieceFamily& family);

json to_json(const PieceRef& P);
PieceRef piece_ref_from_json(const json& j, const PieceFamily& family);

json to_json(const SeparationData& sep);
json to_json(const AxiomReport& report);

// Compact output with sorted keys: equal values give byte-equal text.
std::string canonical(const json& j);

}  // namespace tgraded::io

#pragma once

// JSON encodings. Rationals always travel as strings ("p" or "p/q") so a
// value printed and parsed back is identical.

#include <json.hpp>

#include <string_view>
#include <utility>

#include "fanowalls/gieseker.hpp"
#include "fanowalls/kuznetsov.hpp"
#include "fanowalls/lattice.hpp"
#include "fanowalls/walls.hpp"

namespace fanowalls {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
/// Accepts a string or an integer. Throws ParseError.
Rational rational_from_json(const Json& j);

Json context_json(FanoContext ctx);
FanoContext context_from_json(const Json& j);

/// {"ctx":{"index":2,"degree":3},"ch":["2","0","-2","0"]}
Json chern_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const Json& j);

/// {"lattice":{"index":2,"degree":5},"class":[2,0]}
Json ku_class_json(FanoContext ctx, KuClass u);
std::pair<FanoContext, KuClass> ku_class_from_json(const Json& j);

Json locus_json(const WallLocus& locus);
WallLocus locus_from_json(const Json& j);

/// {"params":[..],"sub":..,"quot":..,"beta":"..","t":"ray"|"p/q","locus":..}
Json candidate_json(const WallCandidate& cand);
WallCandidate candidate_from_json(const Json& j);

Json destabilizer_json(const DestabilizerHit& hit);

/// "r,c,m,n" with 1 to 4 comma-separated rationals; missing trailing
/// entries are zero.
ChernCharacter parse_class(FanoContext ctx, std::string_view text);
/// "a,b" with integers.
KuClass parse_ku_class(std::string_view text);

}  // namespace fanowalls

#pragma once

#include <string>

#include "json.hpp"

#include "apexrep/arrangement.hpp"
#include "apexrep/frontline.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/verifier.hpp"

namespace apexrep {

using Json = nlohmann::json;

// {ordering: [...], edges: [{u, v, side, left_attach?, right_attach?}],
//  ranks: {"u v": int}}
Json drawing_to_json(const FrontLineDrawing& d, const EdgePoset& poset);
FrontLineDrawing drawing_from_json(const Json& j);

// {n, k, segments: [{owner, orientation: "H"|"V", fixed: "p/q",
//  span: ["p/q", "p/q"]}]}. Rationals are always exact strings.
Json arrangement_to_json(const Arrangement& arr);
// Restores segments, n and k. The apex is the "#a" segment and the
// originals are the segments without '#' in their owner, ordered by y. Edge
// curves are not recoverable, so the result cannot be extended further.
Arrangement arrangement_from_json(const Json& j);

// {apex, k, girth_bound, originals: [...], chains: {"u v": [...]}}
Json chains_to_json(const ApexGadget& a);

Json report_to_json(const VerificationReport& r);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace apexrep

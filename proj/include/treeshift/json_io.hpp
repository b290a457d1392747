// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "treeshift/entropy.hpp"
#include "treeshift/recode.hpp"
#include "treeshift/topology.hpp"
#include "treeshift/types.hpp"

namespace treeshift {

using json = nlohmann::json;

// Parses text as JSON; on failure raises ErrorCode::ParseError with the line
// and column of the offending byte.
json parse_json_text(const std::string& text, const std::string& source_name = "<input>");

// System file: {"name": str?, "k": int, "d": int, "matrices": [[[0|1,...],...],...]}
json system_to_json(const TransitionSystem& sys);
TransitionSystem system_from_json(const json& j);

// Block file: {"k": int, "d": int, "height": int, "labels": [int,...]}
json block_to_json(const Block& b);
Block block_from_json(const json& j);

// Forbidden set file: {"k": int, "d": int, "s": int, "blocks": [[labels...],...]}
json forbidden_to_json(const ForbiddenSet& f);
ForbiddenSet forbidden_from_json(const json& j);

// Certificate: {"target": "all" | [i, j], "words": [[0,1,...],...]}
json certificate_to_json(const PrefixSet& p, const CpsTarget& target);

json validation_to_json(const ValidationReport& r);
json bounds_to_json(const BoundsReport& b);
json estimate_to_json(const EntropyEstimate& e);

}  // namespace treeshift

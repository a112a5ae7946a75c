#pragma once

#include <string>

#include <json.hpp>

#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/sampling.hpp"

namespace ordmatch {

using Json = nlohmann::json;

// Accepts a canonical word ("AABB"), a token list, or JSON {"r":..,"edges":..}
// / {"word":..}; used everywhere a matching is an input.
Matching matching_from_text(const std::string& text);

Json to_json(const Matching& m);
Json to_json(const CliqueCertificate& cert);  // 1-based edge indices
Json to_json(const ExtractionResult& res);
Json to_json(const ExperimentReport& rep);

}  // namespace ordmatch

#pragma once

#include "seidelframes/erasures.hpp"
#include "seidelframes/frames.hpp"
#include "seidelframes/seidel.hpp"

#include <json.hpp>

#include <string>

namespace sf {

using Json = nlohmann::ordered_json;

/// Serializes with 17 significant digits for every floating-point value;
/// non-finite values become the strings "inf", "-inf" and "nan".
std::string to_json_text(const Json& j, int indent = 2);

/// Double as JSON: finite values stay numeric, infinities become strings.
Json number(double x);

Json to_json(const FrameParameters& p);
Json to_json(const ErasureSet& s);
Json to_json(const ErasureReport& r);
Json to_json(const BipartiteSearchResult& r);
Json to_json(const SrgReduction& r);
Json to_json(const ReversalReport& r);

/// Copy of `j` without the top-level "timing" member.
Json without_timing(const Json& j);

} // namespace sf

#pragma once

#include "affgr/segments.hpp"
#include "affgr/smoothness.hpp"
#include "affgr/typea.hpp"
#include "affgr/weyl.hpp"

#include <nlohmann/json.hpp>

namespace affgr {

using json = nlohmann::json;

// {type, word, length}
json to_json(const GroupElement& w);
// Replays the word and checks that it is reduced with the stated length.
GroupElement element_from_json(const json& j);

// [{value, color}, ...]
json to_json(const ColoredPartition& p);
ColoredPartition partition_from_json(const json& j);

json to_json(const IntPolynomial& p);
json to_json(const ElementReport& r);
json to_json(const Segment& s);

std::vector<int> parse_int_list(std::string_view text);

}  // namespace affgr

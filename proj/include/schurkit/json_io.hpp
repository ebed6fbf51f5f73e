#pragma once

#include <string>

#include <json.hpp>

#include "schurkit/theorems.hpp"

namespace schurkit {

using ordered_json = nlohmann::ordered_json;

// Literal grammar: comma separated parts, or a bare digit string for parts
// up to 9 ("3321" means 3,3,2,1).  Skew literals are "outer/inner" with the
// "/inner" optional.
std::vector<int> parse_parts(const std::string& text);
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);
SkewShape parse_skew(const std::string& text);

ordered_json to_json(const Partition& p);
ordered_json to_json(const SkewShape& a);
ordered_json to_json(const Ribbon& r);
ordered_json to_json(const SchurExpansion& f);
ordered_json to_json(const Filling& t);
ordered_json to_json(const Report& r);
ordered_json to_json(const OrderedFamily& f);

}  // namespace schurkit

#pragma once

#include <string>

#include <json.hpp>

#include "hwcl/classifier.hpp"
#include "hwcl/cocycle.hpp"

namespace hwcl {

using Json = nlohmann::ordered_json;

// {group, weight, extends, vanishes, rule, citation}; vanishes is null
// when the representation does not extend.
Json verdict_to_json(const Verdict& v);

Json growth_to_json(const GrowthReport& r);

// columns: k, norm, norm_sq, reference
std::string growth_to_csv(const GrowthReport& r);

} // namespace hwcl

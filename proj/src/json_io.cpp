#include "hwcl/json_io.hpp"

#include <cstdio>

namespace hwcl {

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["group"] = v.group.to_string();
    j["weight"] = v.weight.to_string();
    j["extends"] = v.extends;
    if (v.vanishes.has_value())
        j["vanishes"] = *v.vanishes;
    else
        j["vanishes"] = nullptr;
    j["rule"] = std::string(rule_name(v.rule));
    j["citation"] = v.citation;
    return j;
}

Json growth_to_json(const GrowthReport& r) {
    Json j;
    j["ks"] = r.ks;
    j["norms"] = r.norms;
    j["norms_sq"] = r.norms_sq;
    j["reference"] = r.reference;
    j["verdict"] = trend_name(r.verdict);
    j["slope"] = r.slope;
    j["slope_reference"] = r.slope_reference;
    return j;
}

std::string growth_to_csv(const GrowthReport& r) {
    std::string out = "k,norm,norm_sq,reference\n";
    char line[160];
    for (std::size_t i = 0; i < r.ks.size(); ++i) {
        std::snprintf(line, sizeof line, "%lld,%.17g,%.17g,%.17g\n",
                      static_cast<long long>(r.ks[i]), r.norms[i], r.norms_sq[i],
                      r.reference[i]);
        out += line;
    }
    return out;
}

} // namespace hwcl

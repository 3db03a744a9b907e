#include "hwcl/classifier.hpp"

#include <cmath>
#include <cstdio>

#include "hwcl/errors.hpp"

namespace hwcl {

GroupId GroupId::up(double p) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::invalid_argument("GroupId::up: need 1 <= p < infinity");
    return {GroupKind::Up, p};
}

GroupId GroupId::parse(std::string_view spec) {
    if (spec == "uinf") return uinf();
    if (spec == "uinfty-compact") return uinf_compact();
    if (spec == "full") return full_unitary();
    if (spec.rfind("up:", 0) == 0) {
        const std::string num(spec.substr(3));
        char* end = nullptr;
        const double p = std::strtod(num.c_str(), &end);
        if (end == num.c_str() || *end != '\0')
            throw parse_error("bad Schatten exponent in group spec: '" + std::string(spec) + "'");
        if (!(p >= 1.0) || std::isinf(p) || std::isnan(p))
            throw parse_error("group up:<p> needs 1 <= p < infinity");
        return up(p);
    }
    throw parse_error("unknown group '" + std::string(spec) +
                      "' (expected uinf | up:<p> | uinfty-compact | full)");
}

std::string GroupId::to_string() const {
    switch (kind) {
    case GroupKind::Uinf: return "uinf";
    case GroupKind::UinfCompact: return "uinfty-compact";
    case GroupKind::FullUnitary: return "full";
    case GroupKind::Up: {
        char buf[48];
        std::snprintf(buf, sizeof buf, "up:%g", p);
        return buf;
    }
    }
    return "?";
}

std::string_view rule_name(Rule r) {
    switch (r) {
    case Rule::ZeroWeight: return "zero-weight";
    case Rule::SignCount: return "sign-count";
    case Rule::FinitelySupportedNonzero: return "finitely-supported-nonzero";
    case Rule::SizeAtMostOne: return "size-at-most-one";
    case Rule::SizeAtLeastTwo: return "size-at-least-two";
    case Rule::BoundedGroup: return "bounded-group";
    case Rule::DoesNotExtend: return "does-not-extend";
    case Rule::OpenProblem: return "open-problem";
    }
    return "?";
}

bool extends_to(const Weight& w, const GroupId& g) {
    switch (g.kind) {
    case GroupKind::Uinf: return true;
    case GroupKind::Up: return g.p == 1.0 ? true : w.finitely_supported();
    case GroupKind::UinfCompact:
    case GroupKind::FullUnitary: return w.finitely_supported();
    }
    return false;
}

namespace {

// Vanishing for U(inf): lambda = 0, or finitely many entries <= 0, or
// finitely many entries >= 0. With an eventually constant weight the tail
// sign settles the sign counts.
bool uinf_vanishes(const Weight& w) {
    return w.is_zero() || w.tail() != 0;
}

constexpr const char* kCiteUinf =
    "H^1(U(inf),pi_lambda) = 0 iff lambda = 0 or finitely many lambda_j <= 0 "
    "or finitely many lambda_j >= 0";
constexpr const char* kCiteUpSize =
    "for finitely supported lambda, H^1(U_p(H),pi_lambda) = 0 iff |lambda| <= 1";
constexpr const char* kCiteBounded =
    "U(H) and U_infinity(H) are bounded groups; every 1-cocycle of a bounded "
    "group is bounded, hence a coboundary";
constexpr const char* kCiteExtend =
    "pi_lambda extends to U_1(H) iff lambda is bounded, and to U_p(H) with "
    "p > 1, U_infinity(H), U(H) iff lambda has finite support";
constexpr const char* kCiteZero =
    "lambda = 0: the trivial representation of a direct limit of compact "
    "groups has no nonzero continuous additive characters";
constexpr const char* kCiteDensity =
    "; vanishing transfers from the dense subgroup U(inf) to U_1(H)";
constexpr const char* kCiteOpen =
    "bounded lambda with infinite support on U_1(H): open problem";

Verdict uinf_verdict(const Weight& w, const GroupId& g) {
    Verdict v{g, w, true, std::nullopt, Rule::SignCount, kCiteUinf};
    if (w.is_zero()) {
        v.vanishes = true;
        v.rule = Rule::ZeroWeight;
        v.citation = kCiteZero;
    } else if (w.tail() != 0) {
        v.vanishes = true;
        v.rule = Rule::SignCount;
    } else {
        v.vanishes = false;
        v.rule = Rule::FinitelySupportedNonzero;
        v.citation = "finitely supported lambda != 0: H^1(U(inf),pi_lambda) never vanishes";
    }
    return v;
}

} // namespace

Verdict classify(const Weight& w, const GroupId& g) {
    if (!extends_to(w, g))
        return Verdict{g, w, false, std::nullopt, Rule::DoesNotExtend, kCiteExtend};

    switch (g.kind) {
    case GroupKind::UinfCompact:
    case GroupKind::FullUnitary:
        return Verdict{g, w, true, true, Rule::BoundedGroup, kCiteBounded};

    case GroupKind::Uinf:
        return uinf_verdict(w, g);

    case GroupKind::Up: {
        if (w.finitely_supported()) {
            Verdict v{g, w, true, std::nullopt, Rule::SizeAtMostOne, kCiteUpSize};
            if (w.size_abs() <= 1) {
                v.vanishes = true;
                if (w.is_zero()) {
                    v.rule = Rule::ZeroWeight;
                    v.citation = kCiteZero;
                }
            } else {
                v.vanishes = false;
                v.rule = Rule::SizeAtLeastTwo;
            }
            return v;
        }
        // p == 1, bounded weight with infinite support. Decidable only
        // when the U(inf) cohomology already vanishes (density); for an
        // eventually constant weight with nonzero tail that is always the
        // case, but the undecided branch is kept explicit.
        if (uinf_vanishes(w)) {
            Verdict v{g, w, true, true, Rule::SignCount, std::string(kCiteUinf) + kCiteDensity};
            return v;
        }
        return Verdict{g, w, true, std::nullopt, Rule::OpenProblem, kCiteOpen};
    }
    }
    throw std::logic_error("classify: unreachable group kind");
}

} // namespace hwcl

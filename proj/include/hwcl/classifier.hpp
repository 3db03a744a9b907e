#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hwcl/weights.hpp"

namespace hwcl {

enum class GroupKind { Uinf, Up, UinfCompact, FullUnitary };

// One of U(inf), U_p(H) for p in [1,inf), U_infinity(H), U(H).
struct GroupId {
    GroupKind kind = GroupKind::Uinf;
    double p = 1.0; // meaningful for Up only; p >= 1

    static GroupId uinf() { return {GroupKind::Uinf, 1.0}; }
    static GroupId up(double p);
    static GroupId uinf_compact() { return {GroupKind::UinfCompact, 1.0}; }
    static GroupId full_unitary() { return {GroupKind::FullUnitary, 1.0}; }

    // "uinf" | "up:<p>" | "uinfty-compact" | "full"
    static GroupId parse(std::string_view spec);
    std::string to_string() const;
};

enum class Rule {
    ZeroWeight,
    SignCount,
    FinitelySupportedNonzero,
    SizeAtMostOne,
    SizeAtLeastTwo,
    BoundedGroup,
    DoesNotExtend,
    OpenProblem,
};

std::string_view rule_name(Rule r);

// H^1 classification. `vanishes` is present iff the representation
// extends to the group.
struct Verdict {
    GroupId group;
    Weight weight;
    bool extends = false;
    std::optional<bool> vanishes;
    Rule rule = Rule::DoesNotExtend;
    std::string citation;
};

// U(inf): always. U_1(H): bounded weights (every eventually constant
// weight is bounded). U_p (p > 1), U_infinity(H), U(H): finite support.
bool extends_to(const Weight& w, const GroupId& g);

Verdict classify(const Weight& w, const GroupId& g);

} // namespace hwcl

// Brute-force tier evaluator, independent of the production classifier.
// Walks candidate levels from the top down and returns the first whose own
// and all lower tiers' properties are free of failures.
#pragma once

#include <array>
#include <vector>

#include "specj/scale.hpp"

namespace specj::testutil {

using StatusVector = std::array<PropertyStatus, kPropertyKindCount>;

inline CompatLevel scale_oracle(const StatusVector& statuses) {
    auto ok = [&](PropertyKind kind) {
        return statuses[static_cast<std::size_t>(kind)] != PropertyStatus::Fail;
    };

    const std::vector<std::vector<PropertyKind>> tiers = {
        {PropertyKind::Format, PropertyKind::Dependencies},
        {PropertyKind::DataIO, PropertyKind::FaultHandler},
        {PropertyKind::EntryPoint, PropertyKind::ControlFlow, PropertyKind::Design},
    };
    const CompatLevel tier_levels[] = {CompatLevel::CompileTime, CompatLevel::RunTime, CompatLevel::Usage};

    for (int candidate = 2; candidate >= 0; --candidate) {
        bool satisfied = true;
        for (int t = 0; t <= candidate && satisfied; ++t) {
            for (PropertyKind kind : tiers[static_cast<std::size_t>(t)]) {
                if (!ok(kind)) {
                    satisfied = false;
                    break;
                }
            }
        }
        if (satisfied) return tier_levels[candidate];
    }
    return CompatLevel::NotCompatible;
}

// Builds a well-formed result vector for a status assignment; failing
// results carry a placeholder finding so the PropertyResult invariant holds.
inline std::vector<PropertyResult> results_for(const StatusVector& statuses) {
    std::vector<PropertyResult> results;
    for (int i = 0; i < kPropertyKindCount; ++i) {
        PropertyResult r;
        r.kind = static_cast<PropertyKind>(i);
        r.status = statuses[static_cast<std::size_t>(i)];
        if (r.status == PropertyStatus::Fail)
            r.findings.push_back({"TestFailure", property_kind_name(r.kind), "synthetic failure"});
        results.push_back(std::move(r));
    }
    return results;
}

inline StatusVector nth_status_vector(int n) {
    StatusVector v{};
    static const PropertyStatus kStatuses[] = {PropertyStatus::Pass, PropertyStatus::Fail,
                                               PropertyStatus::NotSpecified};
    for (int i = 0; i < kPropertyKindCount; ++i) {
        v[static_cast<std::size_t>(i)] = kStatuses[n % 3];
        n /= 3;
    }
    return v;
}

} // namespace specj::testutil

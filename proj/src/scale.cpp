#include "specj/scale.hpp"

#include <array>

namespace specj {

const char* property_kind_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::Format: return "format";
        case PropertyKind::EntryPoint: return "entry-point";
        case PropertyKind::FaultHandler: return "fault-handler";
        case PropertyKind::Dependencies: return "dependencies";
        case PropertyKind::DataIO: return "data-io";
        case PropertyKind::ControlFlow: return "control-flow";
        case PropertyKind::Design: return "design";
    }
    return "?";
}

const char* property_status_name(PropertyStatus status) {
    switch (status) {
        case PropertyStatus::Pass: return "pass";
        case PropertyStatus::Fail: return "fail";
        case PropertyStatus::NotSpecified: return "not-specified";
    }
    return "?";
}

const char* compat_level_name(CompatLevel level) {
    switch (level) {
        case CompatLevel::NotCompatible: return "not-compatible";
        case CompatLevel::CompileTime: return "compile-time";
        case CompatLevel::RunTime: return "run-time";
        case CompatLevel::Usage: return "usage";
        case CompatLevel::FullyCompatible: return "fully-compatible";
    }
    return "?";
}

CompatLevel classify(const std::vector<PropertyResult>& results) {
    std::array<int, kPropertyKindCount> seen{};
    std::array<bool, kPropertyKindCount> failed{};
    for (const PropertyResult& r : results) {
        int idx = static_cast<int>(r.kind);
        if (idx < 0 || idx >= kPropertyKindCount) throw MalformedResults("unknown property kind");
        ++seen[idx];
        failed[idx] = r.status == PropertyStatus::Fail;
    }
    for (int i = 0; i < kPropertyKindCount; ++i) {
        if (seen[i] != 1)
            throw MalformedResults(std::string("property '") +
                                   property_kind_name(static_cast<PropertyKind>(i)) +
                                   (seen[i] == 0 ? "' missing" : "' duplicated"));
    }

    auto ok = [&](PropertyKind k) { return !failed[static_cast<int>(k)]; };
    bool compile_ok = ok(PropertyKind::Format) && ok(PropertyKind::Dependencies);
    bool runtime_ok = ok(PropertyKind::DataIO) && ok(PropertyKind::FaultHandler);
    bool usage_ok =
        ok(PropertyKind::EntryPoint) && ok(PropertyKind::ControlFlow) && ok(PropertyKind::Design);

    if (!compile_ok) return CompatLevel::NotCompatible;
    if (!runtime_ok) return CompatLevel::CompileTime;
    if (!usage_ok) return CompatLevel::RunTime;
    return CompatLevel::Usage;
}

} // namespace specj

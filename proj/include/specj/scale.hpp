#pragma once

#include <stdexcept>
#include <vector>

#include "specj/findings.hpp"

namespace specj {

// The compatibility scale, ordered. FullyCompatible additionally demands
// behavioural matching, which static verification cannot establish; the
// classifier never returns it.
enum class CompatLevel {
    NotCompatible,
    CompileTime,
    RunTime,
    Usage,
    FullyCompatible,
};

const char* compat_level_name(CompatLevel level);

class MalformedResults : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maps one result per property kind onto the scale. Tiers are cumulative:
//   compile-time  - Format, Dependencies
//   run-time      - DataIO, FaultHandler
//   usage         - EntryPoint, ControlFlow, Design
// A not-specified property never counts against a tier. Throws
// MalformedResults when a kind is missing or duplicated.
CompatLevel classify(const std::vector<PropertyResult>& results);

} // namespace specj

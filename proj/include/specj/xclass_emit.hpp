// Generates the checker-harness source ("XClass") for a specification: one
// import per dependency, a reference of the component's type, and one probe
// invocation per block. Compiling the harness together with a component is
// the external-toolchain way to establish the same facts the conformance
// engine checks statically.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specj/spec_model.hpp"

namespace specj {

class InvalidIdentifier : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProbeRef {
    std::string block;
    int line = 0;   // 1-based line of the invocation statement

    bool operator==(const ProbeRef&) const = default;
};

struct HarnessSource {
    std::string text;
    std::vector<ProbeRef> probes;        // exactly one per spec block
    std::vector<std::string> imports;    // exactly one per spec dependency

    bool operator==(const HarnessSource&) const = default;
};

// Deterministic: the same spec and type name give byte-identical text.
// Throws InvalidIdentifier when component_type_name is not an identifier.
HarnessSource emit_xclass(const SpecDocument& spec, const std::string& component_type_name);

// "XClass_<specname>.java", with non-identifier characters mapped to '_'.
std::string default_harness_filename(const SpecDocument& spec);

// Command line a user would run to compile the harness with a component.
std::string compile_command(const SpecDocument& spec, const std::string& component_path);

} // namespace specj

// Property-by-property evaluation of a component model against a SpecJ
// document. Every mismatch is a finding, never an error; the verdict is
// true exactly when no specified property fails.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "specj/findings.hpp"
#include "specj/scale.hpp"
#include "specj/source_model.hpp"
#include "specj/spec_model.hpp"

namespace specj {

struct VerifyOptions {
    std::set<std::string> provided_libs;      // container-provided dotted names
    std::vector<std::string> classpath;       // listing entries: dotted name, file path, or path#subtype
    bool strict_dependencies = false;

    bool operator==(const VerifyOptions&) const = default;
};

struct MatchReport {
    std::string component;
    std::string spec_name;
    std::vector<PropertyResult> results;      // exactly one per property kind
    bool verdict = false;
    CompatLevel level = CompatLevel::NotCompatible;

    const PropertyResult* result(PropertyKind kind) const;

    bool operator==(const MatchReport&) const = default;
};

// Simple names compare exactly; a qualified name matches a simple one iff
// its last segment equals it. An empty required type matches anything.
bool types_match(const TypeName& required, const TypeName& actual);

// Empty result iff some method satisfies the block's name, parameter
// sequence, return slot and failure type. The first satisfying overload in
// source order wins; otherwise the findings describe the closest overload.
std::vector<Finding> match_block(const Block& block, const ComponentModel& model);

PropertyResult match_dependencies(const SpecDocument& spec, const ComponentModel& model,
                                  const VerifyOptions& opts);

PropertyResult match_entry_point(const SpecDocument& spec, const ComponentModel& model,
                                 const VerifyOptions& opts);

// Storage-field presence and set/get accessor pairing.
std::vector<Finding> match_encapsulation(const SpecDocument& spec, const ComponentModel& model);

// File requirements against the classpath listing.
std::vector<Finding> match_files(const SpecDocument& spec, const VerifyOptions& opts);

PropertyResult match_design(const SpecDocument& spec, const ComponentModel& model);

// Runs every property check, assembles the seven results in fixed order and
// classifies the outcome on the compatibility scale. Pure: identical inputs
// give identical reports.
MatchReport verify_component(const SpecDocument& spec, const ComponentModel& model,
                             const VerifyOptions& opts);

// Report for a source unit the parser rejected: Format fails with a
// ParseError finding, everything else is not-specified.
MatchReport unparseable_report(const std::string& component_path, const std::string& spec_name,
                               const std::string& parse_message);

} // namespace specj

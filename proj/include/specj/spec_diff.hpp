// Modification plans between SpecJ documents: the block and dependency
// edits that turn one structural type into another.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specj/spec_model.hpp"

namespace specj {

class PlanConflict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BlockChange {
    std::string name;
    Block block;

    bool operator==(const BlockChange&) const = default;
};

struct ExtensionSet {
    std::string format;
    std::string entry_point;
    std::optional<std::vector<std::string>> design_order;

    bool operator==(const ExtensionSet&) const = default;
};

struct ModificationPlan {
    std::vector<Block> add_blocks;
    std::vector<std::string> remove_blocks;
    std::vector<BlockChange> change_blocks;
    std::vector<std::string> add_deps;
    std::vector<std::string> remove_deps;
    std::optional<ExtensionSet> set_extensions;

    bool empty() const;

    bool operator==(const ModificationPlan&) const = default;
};

// Minimal plan keyed by block name and dependency path; no rename detection.
ModificationPlan diff_specs(const SpecDocument& from, const SpecDocument& to);

// Returns the edited document, leaving the input untouched. Throws
// PlanConflict on a missing removal/change target, an addition collision,
// or when the edited document would violate its invariants.
SpecDocument apply_plan(const SpecDocument& spec, const ModificationPlan& plan);

// Copy with blocks and dependencies in sorted order, for order-insensitive
// comparison of diff/apply results.
SpecDocument canonicalized(SpecDocument doc);

} // namespace specj

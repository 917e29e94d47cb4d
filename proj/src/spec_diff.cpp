#include "specj/spec_diff.hpp"

#include <algorithm>
#include <set>

namespace specj {

namespace {

ExtensionSet extensions_of(const SpecDocument& doc) {
    return {doc.properties.format, doc.properties.entry_point, doc.properties.design_order};
}

void check_plan_invariants(const ModificationPlan& plan) {
    std::set<std::string> names;
    auto claim = [&](const std::string& name) {
        if (!names.insert(name).second)
            throw PlanConflict("block '" + name + "' appears in more than one edit list");
    };
    for (const Block& b : plan.add_blocks) claim(b.name);
    for (const std::string& n : plan.remove_blocks) claim(n);
    for (const BlockChange& c : plan.change_blocks) claim(c.name);

    for (const std::string& dep : plan.add_deps) {
        if (std::find(plan.remove_deps.begin(), plan.remove_deps.end(), dep) != plan.remove_deps.end())
            throw PlanConflict("dependency '" + dep + "' is both added and removed");
    }
}

} // namespace

bool ModificationPlan::empty() const {
    return add_blocks.empty() && remove_blocks.empty() && change_blocks.empty() && add_deps.empty() &&
           remove_deps.empty() && !set_extensions;
}

ModificationPlan diff_specs(const SpecDocument& from, const SpecDocument& to) {
    ModificationPlan plan;

    for (const Block& old_block : from.properties.blocks) {
        const Block* new_block = to.find_block(old_block.name);
        if (!new_block)
            plan.remove_blocks.push_back(old_block.name);
        else if (*new_block != old_block)
            plan.change_blocks.push_back({old_block.name, *new_block});
    }
    for (const Block& new_block : to.properties.blocks) {
        if (!from.find_block(new_block.name)) plan.add_blocks.push_back(new_block);
    }

    const std::vector<std::string>& from_deps = from.properties.dependencies;
    const std::vector<std::string>& to_deps = to.properties.dependencies;
    for (const std::string& dep : from_deps) {
        if (std::find(to_deps.begin(), to_deps.end(), dep) == to_deps.end())
            plan.remove_deps.push_back(dep);
    }
    for (const std::string& dep : to_deps) {
        if (std::find(from_deps.begin(), from_deps.end(), dep) == from_deps.end())
            plan.add_deps.push_back(dep);
    }

    if (extensions_of(from) != extensions_of(to)) plan.set_extensions = extensions_of(to);
    return plan;
}

SpecDocument apply_plan(const SpecDocument& spec, const ModificationPlan& plan) {
    check_plan_invariants(plan);

    SpecDocument result = spec;
    std::vector<Block>& blocks = result.properties.blocks;

    for (const std::string& name : plan.remove_blocks) {
        auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.name == name; });
        if (it == blocks.end()) throw PlanConflict("cannot remove block '" + name + "': no such block");
        blocks.erase(it);
    }

    for (const BlockChange& change : plan.change_blocks) {
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const Block& b) { return b.name == change.name; });
        if (it == blocks.end()) throw PlanConflict("cannot change block '" + change.name + "': no such block");
        if (change.block.name != change.name &&
            std::any_of(blocks.begin(), blocks.end(),
                        [&](const Block& b) { return b.name == change.block.name; }))
            throw PlanConflict("cannot rename block '" + change.name + "' to existing '" + change.block.name + "'");
        *it = change.block;
    }

    for (const Block& block : plan.add_blocks) {
        if (std::any_of(blocks.begin(), blocks.end(), [&](const Block& b) { return b.name == block.name; }))
            throw PlanConflict("cannot add block '" + block.name + "': name already declared");
        blocks.push_back(block);
    }

    std::vector<std::string>& deps = result.properties.dependencies;
    for (const std::string& dep : plan.remove_deps) {
        auto it = std::find(deps.begin(), deps.end(), dep);
        if (it == deps.end()) throw PlanConflict("cannot remove dependency '" + dep + "': not declared");
        deps.erase(it);
    }
    for (const std::string& dep : plan.add_deps) {
        if (std::find(deps.begin(), deps.end(), dep) != deps.end())
            throw PlanConflict("cannot add dependency '" + dep + "': already declared");
        deps.push_back(dep);
    }

    if (plan.set_extensions) {
        result.properties.format = plan.set_extensions->format;
        result.properties.entry_point = plan.set_extensions->entry_point;
        result.properties.design_order = plan.set_extensions->design_order;
    }

    std::vector<Diagnostic> diags = validate_spec(result);
    if (!diags.empty())
        throw PlanConflict("edited specification is invalid: " + diags.front().message);
    return result;
}

SpecDocument canonicalized(SpecDocument doc) {
    std::sort(doc.properties.blocks.begin(), doc.properties.blocks.end(),
              [](const Block& a, const Block& b) { return a.name < b.name; });
    std::sort(doc.properties.dependencies.begin(), doc.properties.dependencies.end());
    return doc;
}

} // namespace specj

// Renders a component source that satisfies a specification, for property
// tests that need conformant/cross-paired inputs without touching disk.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "specj/spec_model.hpp"

namespace specj::testutil {

inline std::string conformant_source_for(const SpecDocument& spec, const std::string& class_name) {
    const PhysicalProperties& props = spec.properties;
    std::ostringstream out;

    for (const std::string& lib : props.dependencies) out << "import " << lib << ";\n";
    if (!props.dependencies.empty()) out << "\n";

    out << "public class " << class_name << " {\n";

    std::vector<std::string> fields;
    for (const Block& block : props.blocks) {
        if (!block.storage || block.storage->name.empty()) continue;
        bool seen = false;
        for (const std::string& f : fields) seen = seen || f == block.storage->name;
        if (seen) continue;
        fields.push_back(block.storage->name);
        out << "    private " << block.storage->type << " " << block.storage->name << ";\n";
    }

    bool emitted_main = false;
    for (const Block& block : props.blocks) {
        std::vector<std::string> inputs = block.data_input.effective_types();
        std::vector<std::string> outputs = block.data_output.effective_types();
        std::string return_type =
            (!outputs.empty() && !outputs.front().empty()) ? outputs.front() : "void";

        bool standalone_shape = block.name == "main" && inputs.size() == 1 &&
                                inputs[0].find("[]") != std::string::npos && return_type == "void";
        out << "    public " << (standalone_shape ? "static " : "") << return_type << " " << block.name
            << "(";
        emitted_main = emitted_main || standalone_shape;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (i) out << ", ";
            out << (inputs[i].empty() ? "Object" : inputs[i]) << " p" << i;
        }
        out << ")";
        if (!block.failure.empty()) out << " throws " << block.failure;
        out << " {\n    }\n";
    }

    if (props.entry_point == "main" && !emitted_main)
        out << "    public static void main(String[] args) {\n    }\n";

    out << "}\n";
    return out.str();
}

} // namespace specj::testutil

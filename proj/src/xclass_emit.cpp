#include "specj/xclass_emit.hpp"

#include <cctype>
#include <sstream>

namespace specj {

namespace {

std::string sanitize_identifier(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        out.push_back(ok ? c : '_');
    }
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(out.begin(), '_');
    return out;
}

struct HarnessWriter {
    std::ostringstream out;
    int line = 0;

    void emit(const std::string& s) {
        out << s << "\n";
        ++line;
    }
};

} // namespace

HarnessSource emit_xclass(const SpecDocument& spec, const std::string& component_type_name) {
    if (!is_identifier(component_type_name))
        throw InvalidIdentifier("'" + component_type_name + "' is not a valid type identifier");

    HarnessSource harness;
    HarnessWriter w;

    for (const std::string& lib : spec.properties.dependencies) {
        w.emit("import " + lib + ";");
        harness.imports.push_back(lib);
    }
    if (!spec.properties.dependencies.empty()) w.emit("");

    w.emit("class XClass_" + sanitize_identifier(spec.name) + " {");
    w.emit("    " + component_type_name + " target;");
    w.emit("");
    w.emit("    void probeAll() {");

    for (const Block& block : spec.properties.blocks) {
        std::vector<std::string> input_types = block.data_input.effective_types();

        // Placeholder arguments: one default-initialized local per declared
        // input type. An unconstrained slot gets an Object.
        std::string args;
        for (std::size_t i = 0; i < input_types.size(); ++i) {
            std::string arg_type = input_types[i].empty() ? "Object" : input_types[i];
            std::string arg_name = block.name + "_p" + std::to_string(i);
            w.emit("        " + arg_type + " " + arg_name + ";");
            if (i) args += ", ";
            args += arg_name;
        }

        std::vector<std::string> output_types = block.data_output.effective_types();
        bool has_result = !output_types.empty() && !output_types.front().empty() &&
                          output_types.front() != "void";

        std::string call = "target." + block.name + "(" + args + ");";
        if (has_result) call = output_types.front() + " " + block.name + "_ret = " + call;

        if (!block.failure.empty()) {
            w.emit("        try {");
            w.emit("            " + call);
            harness.probes.push_back({block.name, w.line});
            w.emit("        } catch (" + block.failure + " " + block.name + "_failure) {");
            w.emit("        }");
        } else {
            w.emit("        " + call);
            harness.probes.push_back({block.name, w.line});
        }
    }

    w.emit("    }");
    w.emit("}");

    harness.text = w.out.str();
    return harness;
}

std::string default_harness_filename(const SpecDocument& spec) {
    return "XClass_" + sanitize_identifier(spec.name) + ".java";
}

std::string compile_command(const SpecDocument& spec, const std::string& component_path) {
    return "javac " + default_harness_filename(spec) + " " + component_path;
}

} // namespace specj

#include "specj/conformance.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace specj {

namespace {

// One classpath listing entry: "path#annotation" carries an optional
// sub-type tag after '#'.
struct ListingEntry {
    std::string base;
    std::string annotation;
};

ListingEntry split_entry(const std::string& raw) {
    std::size_t hash = raw.rfind('#');
    if (hash == std::string::npos) return {raw, ""};
    return {raw.substr(0, hash), raw.substr(hash + 1)};
}

std::string basename_of(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string strip_lib_extension(const std::string& name) {
    for (const char* ext : {".lib", ".jar", ".class", ".java"}) {
        std::string suffix(ext);
        if (name.size() > suffix.size() && name.ends_with(suffix))
            return name.substr(0, name.size() - suffix.size());
    }
    return name;
}

bool classpath_has_lib(const VerifyOptions& opts, const std::string& lib) {
    for (const std::string& raw : opts.classpath) {
        ListingEntry entry = split_entry(raw);
        if (entry.base == lib) return true;
        if (strip_lib_extension(basename_of(entry.base)) == lib) return true;
    }
    return false;
}

bool classpath_has_file(const VerifyOptions& opts, const std::string& filename,
                        const std::string& sub_type) {
    for (const std::string& raw : opts.classpath) {
        ListingEntry entry = split_entry(raw);
        if (basename_of(entry.base) != filename) continue;
        if (!sub_type.empty() && entry.annotation != sub_type) continue;
        return true;
    }
    return false;
}

Finding make_finding(const char* code, std::string subject, std::string message) {
    return Finding{code, std::move(subject), std::move(message)};
}

std::string render_types(const std::vector<TypeName>& types) {
    std::string out = "(";
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i) out += ", ";
        out += types[i].str();
    }
    out += ")";
    return out;
}

bool params_match(const std::vector<TypeName>& required, const std::vector<TypeName>& actual) {
    if (required.size() != actual.size()) return false;
    for (std::size_t i = 0; i < required.size(); ++i) {
        if (!types_match(required[i], actual[i])) return false;
    }
    return true;
}

const MethodSig* find_method(const ComponentModel& model, const std::string& name) {
    for (const MethodSig& m : model.methods) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

std::string accessor_name(const char* prefix, const std::string& storage_name) {
    std::string out = prefix;
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(storage_name[0])));
    out += storage_name.substr(1);
    return out;
}

} // namespace

const PropertyResult* MatchReport::result(PropertyKind kind) const {
    for (const PropertyResult& r : results) {
        if (r.kind == kind) return &r;
    }
    return nullptr;
}

bool types_match(const TypeName& required, const TypeName& actual) {
    if (required.empty()) return true;   // unconstrained slot
    if (required.array_dims != actual.array_dims) return false;
    if (actual.empty()) return false;
    if (required.segments.size() == actual.segments.size()) return required.segments == actual.segments;
    if (required.segments.size() == 1) return actual.last_segment() == required.segments[0];
    if (actual.segments.size() == 1) return required.last_segment() == actual.segments[0];
    return false;
}

std::vector<Finding> match_block(const Block& block, const ComponentModel& model) {
    using namespace finding_code;

    std::vector<TypeName> required_params;
    for (const std::string& t : block.data_input.effective_types())
        required_params.push_back(TypeName::parse(t));

    std::vector<std::string> out_types = block.data_output.effective_types();
    std::optional<TypeName> required_return;
    if (!out_types.empty()) required_return = TypeName::parse(out_types.front());

    std::optional<TypeName> required_failure;
    if (!block.failure.empty()) required_failure = TypeName::parse(block.failure);

    // Stages: 0 = name only, 1 = + params, 2 = + return, 3 = satisfied.
    int best_stage = -1;
    for (const MethodSig& m : model.methods) {
        if (m.name != block.name) continue;
        int stage = 0;
        if (params_match(required_params, m.params)) {
            stage = 1;
            if (!required_return || types_match(*required_return, m.return_type)) {
                stage = 2;
                bool throws_ok = !required_failure ||
                                 std::any_of(m.throws_list.begin(), m.throws_list.end(),
                                             [&](const TypeName& t) { return types_match(*required_failure, t); });
                if (throws_ok) return {};   // first satisfying overload in source order
            }
        }
        best_stage = std::max(best_stage, stage);
    }

    if (best_stage < 0)
        return {make_finding(kMissingMethod, block.name, "no method named '" + block.name + "'")};
    if (best_stage == 0)
        return {make_finding(kWrongParams, block.name,
                             "no overload of '" + block.name + "' accepts " + render_types(required_params))};
    if (best_stage == 1)
        return {make_finding(kWrongReturn, block.name,
                             "method '" + block.name + "' does not return " + required_return->str())};
    return {make_finding(kMissingThrows, block.name,
                         "method '" + block.name + "' does not declare throws " + required_failure->str())};
}

PropertyResult match_dependencies(const SpecDocument& spec, const ComponentModel& model,
                                  const VerifyOptions& opts) {
    using namespace finding_code;

    PropertyResult result;
    result.kind = PropertyKind::Dependencies;
    const std::vector<std::string>& deps = spec.properties.dependencies;
    if (deps.empty()) {
        result.status = PropertyStatus::NotSpecified;
        return result;
    }

    for (const std::string& lib : deps) {
        if (std::find(model.imports.begin(), model.imports.end(), lib) == model.imports.end())
            result.findings.push_back(
                make_finding(kMissingImport, lib, "required library '" + lib + "' is not imported"));
    }

    if (opts.strict_dependencies) {
        // Strict mode resolves every import the component declares, the way
        // a compile-and-link step would; a container-provided library that
        // is neither on the classpath nor in provided_libs fails here.
        std::vector<std::string> seen;
        for (const std::string& imp : model.imports) {
            if (std::find(seen.begin(), seen.end(), imp) != seen.end()) continue;
            seen.push_back(imp);
            if (opts.provided_libs.count(imp)) continue;
            if (classpath_has_lib(opts, imp)) continue;
            result.findings.push_back(make_finding(
                kUnresolvedDependency, imp,
                "import '" + imp + "' resolves neither on the classpath nor in provided libraries"));
        }
    }

    result.status = result.findings.empty() ? PropertyStatus::Pass : PropertyStatus::Fail;
    return result;
}

PropertyResult match_entry_point(const SpecDocument& spec, const ComponentModel& model,
                                 const VerifyOptions& opts) {
    using namespace finding_code;

    PropertyResult result;
    result.kind = PropertyKind::EntryPoint;
    const std::string& entry = spec.properties.entry_point;
    if (entry.empty()) {
        result.status = PropertyStatus::NotSpecified;
        return result;
    }

    if (entry == "main") {
        if (!model.has_standalone_entry)
            result.findings.push_back(make_finding(
                kMissingEntryPoint, entry, "no 'public static void main' with a single array parameter"));
    } else if (entry.find('.') != std::string::npos) {
        if (!classpath_has_file(opts, entry, ""))
            result.findings.push_back(
                make_finding(kMissingManifest, entry, "manifest file '" + entry + "' not present on classpath"));
    } else if (const Block* block = spec.find_block(entry)) {
        result.findings = match_block(*block, model);
    } else {
        result.findings.push_back(
            make_finding(kUnresolvedEntryPoint, entry, "entry point '" + entry + "' names no declared block"));
    }

    result.status = result.findings.empty() ? PropertyStatus::Pass : PropertyStatus::Fail;
    return result;
}

std::vector<Finding> match_encapsulation(const SpecDocument& spec, const ComponentModel& model) {
    using namespace finding_code;

    std::vector<Finding> findings;
    std::vector<std::string> seen_storage;
    for (const Block& block : spec.properties.blocks) {
        if (!block.storage || block.storage->name.empty()) continue;
        const StorageReq& req = *block.storage;
        if (std::find(seen_storage.begin(), seen_storage.end(), req.name) != seen_storage.end()) continue;
        seen_storage.push_back(req.name);

        TypeName required_type = TypeName::parse(req.type);
        bool field_found = std::any_of(model.fields.begin(), model.fields.end(), [&](const FieldSig& f) {
            return f.name == req.name && types_match(required_type, f.type);
        });
        if (!field_found)
            findings.push_back(make_finding(
                kMissingStorageField, req.name,
                "no field '" + req.name + "' of type " + required_type.str() + " for declared storage"));

        // When the spec declares the set/get convention for this storage,
        // the component must implement both halves or neither.
        std::string set_name = accessor_name("set", req.name);
        std::string get_name = accessor_name("get", req.name);
        if (spec.find_block(set_name) || spec.find_block(get_name)) {
            bool has_set = find_method(model, set_name) != nullptr;
            bool has_get = find_method(model, get_name) != nullptr;
            if (has_set != has_get) {
                const std::string& missing = has_set ? get_name : set_name;
                findings.push_back(make_finding(
                    kDataAccessorPairing, missing,
                    "accessor pair for storage '" + req.name + "' is incomplete: missing '" + missing + "'"));
            }
        }
    }
    return findings;
}

std::vector<Finding> match_files(const SpecDocument& spec, const VerifyOptions& opts) {
    using namespace finding_code;

    std::vector<Finding> findings;
    std::vector<std::string> seen;
    for (const Block& block : spec.properties.blocks) {
        if (!block.file || block.file->name.empty()) continue;
        const FileReq& req = *block.file;
        std::string expected = req.expected_filename();
        std::string key = expected + "#" + req.sub_type;
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);

        if (!classpath_has_file(opts, expected, req.sub_type)) {
            std::string detail = "required file '" + expected + "'";
            if (!req.sub_type.empty()) detail += " (sub-type '" + req.sub_type + "')";
            findings.push_back(make_finding(kMissingFile, expected, detail + " not present on classpath"));
        }
    }
    return findings;
}

PropertyResult match_design(const SpecDocument& spec, const ComponentModel& model) {
    using namespace finding_code;

    PropertyResult result;
    result.kind = PropertyKind::Design;
    if (!spec.properties.design_order) {
        result.status = PropertyStatus::NotSpecified;
        return result;
    }

    const std::vector<std::string>& order = *spec.properties.design_order;
    for (const std::string& name : order) {
        if (!find_method(model, name))
            result.findings.push_back(make_finding(
                kMissingDesignMethod, name, "activation sequence names '" + name + "' but no such method exists"));
    }

    if (!order.empty()) {
        result.note = "activation sequence: ";
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i) result.note += " -> ";
            result.note += order[i];
        }
    }

    result.status = result.findings.empty() ? PropertyStatus::Pass : PropertyStatus::Fail;
    return result;
}

MatchReport verify_component(const SpecDocument& spec, const ComponentModel& model,
                             const VerifyOptions& opts) {
    using namespace finding_code;

    const PhysicalProperties& props = spec.properties;

    // Format.
    PropertyResult format;
    format.kind = PropertyKind::Format;
    if (props.format.empty()) {
        format.status = PropertyStatus::NotSpecified;
    } else if (props.format == kSourceFormatTag) {
        format.status = PropertyStatus::Pass;
    } else {
        format.status = PropertyStatus::Fail;
        format.findings.push_back(make_finding(
            kWrongFormat, props.format,
            "specification demands format '" + props.format + "', component source is '" + kSourceFormatTag + "'"));
    }

    // Blocks: signature findings report under DataIO, throws findings under
    // FaultHandler.
    PropertyResult data_io;
    data_io.kind = PropertyKind::DataIO;
    PropertyResult fault;
    fault.kind = PropertyKind::FaultHandler;

    bool any_failure_declared = false;
    bool any_file_or_storage = false;
    for (const Block& block : props.blocks) {
        if (!block.failure.empty()) any_failure_declared = true;
        if (block.file || block.storage) any_file_or_storage = true;
        for (Finding& f : match_block(block, model)) {
            if (f.code == kMissingThrows)
                fault.findings.push_back(std::move(f));
            else
                data_io.findings.push_back(std::move(f));
        }
    }
    for (Finding& f : match_encapsulation(spec, model)) data_io.findings.push_back(std::move(f));
    for (Finding& f : match_files(spec, opts)) data_io.findings.push_back(std::move(f));

    bool data_io_specified = !props.blocks.empty() || any_file_or_storage;
    data_io.status = !data_io_specified ? PropertyStatus::NotSpecified
                     : data_io.findings.empty() ? PropertyStatus::Pass
                                                : PropertyStatus::Fail;
    fault.status = !any_failure_declared ? PropertyStatus::NotSpecified
                   : fault.findings.empty() ? PropertyStatus::Pass
                                            : PropertyStatus::Fail;

    // Control flow has no spec syntax; it is reported for completeness and
    // is always not-specified.
    PropertyResult control;
    control.kind = PropertyKind::ControlFlow;
    control.status = PropertyStatus::NotSpecified;

    MatchReport report;
    report.component = model.path;
    report.spec_name = spec.name;
    report.results.push_back(std::move(format));
    report.results.push_back(match_entry_point(spec, model, opts));
    report.results.push_back(std::move(fault));
    report.results.push_back(match_dependencies(spec, model, opts));
    report.results.push_back(std::move(data_io));
    report.results.push_back(std::move(control));
    report.results.push_back(match_design(spec, model));

    report.verdict = std::none_of(report.results.begin(), report.results.end(), [](const PropertyResult& r) {
        return r.status == PropertyStatus::Fail;
    });
    report.level = classify(report.results);
    return report;
}

MatchReport unparseable_report(const std::string& component_path, const std::string& spec_name,
                               const std::string& parse_message) {
    MatchReport report;
    report.component = component_path;
    report.spec_name = spec_name;

    static constexpr PropertyKind kOrder[] = {
        PropertyKind::Format,       PropertyKind::EntryPoint, PropertyKind::FaultHandler,
        PropertyKind::Dependencies, PropertyKind::DataIO,     PropertyKind::ControlFlow,
        PropertyKind::Design,
    };
    for (PropertyKind kind : kOrder) {
        PropertyResult r;
        r.kind = kind;
        if (kind == PropertyKind::Format) {
            r.status = PropertyStatus::Fail;
            r.findings.push_back(
                Finding{finding_code::kParseError, component_path, parse_message});
        } else {
            r.status = PropertyStatus::NotSpecified;
        }
        report.results.push_back(std::move(r));
    }
    report.verdict = false;
    report.level = classify(report.results);
    return report;
}

} // namespace specj

#include "specj/report_io.hpp"

#include <sstream>

namespace specj {

namespace {

using nlohmann::json;

PropertyKind kind_from_name(const std::string& name) {
    for (int i = 0; i < kPropertyKindCount; ++i) {
        PropertyKind kind = static_cast<PropertyKind>(i);
        if (name == property_kind_name(kind)) return kind;
    }
    throw std::invalid_argument("unknown property kind '" + name + "'");
}

PropertyStatus status_from_name(const std::string& name) {
    for (PropertyStatus s : {PropertyStatus::Pass, PropertyStatus::Fail, PropertyStatus::NotSpecified}) {
        if (name == property_status_name(s)) return s;
    }
    throw std::invalid_argument("unknown property status '" + name + "'");
}

CompatLevel level_from_name(const std::string& name) {
    for (CompatLevel l : {CompatLevel::NotCompatible, CompatLevel::CompileTime, CompatLevel::RunTime,
                          CompatLevel::Usage, CompatLevel::FullyCompatible}) {
        if (name == compat_level_name(l)) return l;
    }
    throw std::invalid_argument("unknown compatibility level '" + name + "'");
}

json finding_to_json(const Finding& f) {
    return json{{"code", f.code}, {"subject", f.subject}, {"message", f.message}};
}

Finding finding_from_json(const json& j) {
    return Finding{j.at("code").get<std::string>(), j.at("subject").get<std::string>(),
                   j.at("message").get<std::string>()};
}

json result_to_json(const PropertyResult& r) {
    json findings = json::array();
    for (const Finding& f : r.findings) findings.push_back(finding_to_json(f));
    return json{{"property", property_kind_name(r.kind)},
                {"status", property_status_name(r.status)},
                {"findings", std::move(findings)},
                {"note", r.note}};
}

PropertyResult result_from_json(const json& j) {
    PropertyResult r;
    r.kind = kind_from_name(j.at("property").get<std::string>());
    r.status = status_from_name(j.at("status").get<std::string>());
    for (const json& f : j.at("findings")) r.findings.push_back(finding_from_json(f));
    r.note = j.at("note").get<std::string>();
    return r;
}

json param_seq_to_json(const ParamSeq& seq) {
    json out = json::array();
    for (const Param& p : seq.params) out.push_back(json{{"type", p.type}, {"value", p.value}});
    return out;
}

ParamSeq param_seq_from_json(const json& j) {
    ParamSeq seq;
    for (const json& p : j)
        seq.params.push_back(Param{p.at("type").get<std::string>(), p.at("value").get<std::string>()});
    return seq;
}

json block_to_json(const Block& b) {
    json out{{"name", b.name},
             {"input", param_seq_to_json(b.data_input)},
             {"output", param_seq_to_json(b.data_output)},
             {"failure", b.failure}};
    if (b.file)
        out["file"] = json{{"name", b.file->name}, {"type", b.file->type}, {"sub_type", b.file->sub_type}};
    else
        out["file"] = nullptr;
    if (b.storage)
        out["storage"] = json{{"name", b.storage->name}, {"type", b.storage->type}};
    else
        out["storage"] = nullptr;
    return out;
}

Block block_from_json(const json& j) {
    Block b;
    b.name = j.at("name").get<std::string>();
    b.data_input = param_seq_from_json(j.at("input"));
    b.data_output = param_seq_from_json(j.at("output"));
    b.failure = j.at("failure").get<std::string>();
    if (!j.at("file").is_null()) {
        const json& f = j.at("file");
        b.file = FileReq{f.at("name").get<std::string>(), f.at("type").get<std::string>(),
                         f.at("sub_type").get<std::string>()};
    }
    if (!j.at("storage").is_null()) {
        const json& s = j.at("storage");
        b.storage = StorageReq{s.at("name").get<std::string>(), s.at("type").get<std::string>()};
    }
    return b;
}

} // namespace

json to_json(const MatchReport& report) {
    json results = json::array();
    for (const PropertyResult& r : report.results) results.push_back(result_to_json(r));
    return json{{"kind", "match-report"},
                {"component", report.component},
                {"spec", report.spec_name},
                {"verdict", report.verdict},
                {"level", compat_level_name(report.level)},
                {"results", std::move(results)}};
}

MatchReport match_report_from_json(const json& j) {
    MatchReport report;
    report.component = j.at("component").get<std::string>();
    report.spec_name = j.at("spec").get<std::string>();
    report.verdict = j.at("verdict").get<bool>();
    report.level = level_from_name(j.at("level").get<std::string>());
    for (const json& r : j.at("results")) report.results.push_back(result_from_json(r));
    return report;
}

json to_json(const CorpusReport& report) {
    json reports = json::array();
    for (const MatchReport& r : report.reports) reports.push_back(to_json(r));
    return json{{"kind", "corpus-report"},
                {"total", report.total},
                {"matched", report.matched},
                {"flagged", report.flagged},
                {"dependency_only_failures", report.dependency_only_failures},
                {"reports", std::move(reports)}};
}

CorpusReport corpus_report_from_json(const json& j) {
    CorpusReport report;
    report.total = j.at("total").get<int>();
    report.matched = j.at("matched").get<int>();
    report.flagged = j.at("flagged").get<int>();
    report.dependency_only_failures = j.at("dependency_only_failures").get<int>();
    for (const json& r : j.at("reports")) report.reports.push_back(match_report_from_json(r));
    return report;
}

json to_json(const ModificationPlan& plan) {
    json add_blocks = json::array();
    for (const Block& b : plan.add_blocks) add_blocks.push_back(block_to_json(b));
    json change_blocks = json::array();
    for (const BlockChange& c : plan.change_blocks)
        change_blocks.push_back(json{{"name", c.name}, {"block", block_to_json(c.block)}});

    json extensions = nullptr;
    if (plan.set_extensions) {
        extensions = json{{"format", plan.set_extensions->format},
                          {"entry_point", plan.set_extensions->entry_point}};
        if (plan.set_extensions->design_order)
            extensions["design_order"] = *plan.set_extensions->design_order;
        else
            extensions["design_order"] = nullptr;
    }

    return json{{"kind", "modification-plan"},
                {"add_blocks", std::move(add_blocks)},
                {"remove_blocks", plan.remove_blocks},
                {"change_blocks", std::move(change_blocks)},
                {"add_deps", plan.add_deps},
                {"remove_deps", plan.remove_deps},
                {"set_extensions", std::move(extensions)}};
}

ModificationPlan plan_from_json(const json& j) {
    ModificationPlan plan;
    for (const json& b : j.at("add_blocks")) plan.add_blocks.push_back(block_from_json(b));
    plan.remove_blocks = j.at("remove_blocks").get<std::vector<std::string>>();
    for (const json& c : j.at("change_blocks"))
        plan.change_blocks.push_back({c.at("name").get<std::string>(), block_from_json(c.at("block"))});
    plan.add_deps = j.at("add_deps").get<std::vector<std::string>>();
    plan.remove_deps = j.at("remove_deps").get<std::vector<std::string>>();
    if (!j.at("set_extensions").is_null()) {
        const json& e = j.at("set_extensions");
        ExtensionSet ext;
        ext.format = e.at("format").get<std::string>();
        ext.entry_point = e.at("entry_point").get<std::string>();
        if (!e.at("design_order").is_null())
            ext.design_order = e.at("design_order").get<std::vector<std::string>>();
        plan.set_extensions = std::move(ext);
    }
    return plan;
}

std::string render_text(const MatchReport& report) {
    std::ostringstream out;
    out << "component: " << report.component << "\n";
    out << "spec: " << report.spec_name << "\n";
    out << "verdict: " << (report.verdict ? "true" : "false") << "\n";
    out << "level: " << compat_level_name(report.level) << "\n";
    out << "scale tiers: compile-time [format, dependencies] < run-time [data-io, fault-handler]"
           " < usage [entry-point, control-flow, design]\n";
    for (const PropertyResult& r : report.results) {
        out << "  " << property_kind_name(r.kind);
        for (std::size_t pad = std::string(property_kind_name(r.kind)).size(); pad < 14; ++pad) out << ' ';
        out << property_status_name(r.status);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
        for (const Finding& f : r.findings)
            out << "    - " << f.code << " " << f.subject << ": " << f.message << "\n";
    }
    return out.str();
}

std::string render_text(const CorpusReport& report) {
    std::ostringstream out;
    out << "corpus: " << report.total << " components, " << report.matched << " matched, "
        << report.flagged << " flagged, " << report.dependency_only_failures
        << " dependency-only failures\n";
    for (const MatchReport& r : report.reports) {
        if (r.verdict) continue;
        out << "  " << r.component << "  level=" << compat_level_name(r.level) << "\n";
        for (const PropertyResult& p : r.results) {
            for (const Finding& f : p.findings)
                out << "    - " << property_kind_name(p.kind) << ": " << f.code << " " << f.subject << "\n";
        }
    }
    return out.str();
}

std::string render_text(const ModificationPlan& plan) {
    if (plan.empty()) return "modification plan: no changes\n";

    std::ostringstream out;
    out << "modification plan:\n";
    for (const std::string& name : plan.remove_blocks) out << "  remove block " << name << "\n";
    for (const BlockChange& c : plan.change_blocks) out << "  change block " << c.name << "\n";
    for (const Block& b : plan.add_blocks) out << "  add block " << b.name << "\n";
    for (const std::string& dep : plan.remove_deps) out << "  remove dependency " << dep << "\n";
    for (const std::string& dep : plan.add_deps) out << "  add dependency " << dep << "\n";
    if (plan.set_extensions) {
        out << "  set extensions: format=" << (plan.set_extensions->format.empty() ? "(none)" : plan.set_extensions->format)
            << ", entry-point=" << (plan.set_extensions->entry_point.empty() ? "(none)" : plan.set_extensions->entry_point)
            << ", design-order=";
        if (!plan.set_extensions->design_order) {
            out << "(none)";
        } else {
            out << "[";
            const std::vector<std::string>& order = *plan.set_extensions->design_order;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i) out << ", ";
                out << order[i];
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace specj

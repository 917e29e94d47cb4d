// specj command-line frontend: verify, corpus, emit-xclass, diff and
// gen-corpus. Reports go to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 verdict true / command succeeded, 1 verdict false or
// flagged components, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specj/conformance.hpp"
#include "specj/corpus.hpp"
#include "specj/report_io.hpp"
#include "specj/source_parser.hpp"
#include "specj/spec_diff.hpp"
#include "specj/spec_model.hpp"
#include "specj/xclass_emit.hpp"

namespace {

using namespace specj;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SpecDocument load_spec(const std::string& path) {
    try {
        return parse_spec(read_file(path));
    } catch (const SpecError& e) {
        throw CliError("invalid specification '" + path + "': " + e.what());
    }
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError("cannot write '" + out_path + "'");
    out << content;
}

struct CommonFlags {
    std::string spec_path;
    std::vector<std::string> provided_libs;
    std::vector<std::string> classpath;
    bool strict = false;
    std::string output_format = "text";
    std::string out_path;
};

void add_verify_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--provided-lib", flags.provided_libs,
                    "dotted library name the deployment environment provides (repeatable)");
    cmd->add_option("--classpath", flags.classpath,
                    "classpath listing entry: directory, file, dotted name, or path#subtype (repeatable)");
    cmd->add_flag("--strict", flags.strict, "also resolve every import against classpath/provided libs");
}

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.output_format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--out", flags.out_path, "write the report to this file instead of stdout");
}

VerifyOptions make_options(const CommonFlags& flags) {
    VerifyOptions opts;
    for (const std::string& lib : flags.provided_libs) {
        if (!is_dotted_path(lib)) throw CliError("--provided-lib '" + lib + "' is not a dotted name");
        opts.provided_libs.insert(lib);
    }
    opts.classpath = flags.classpath;
    opts.strict_dependencies = flags.strict;
    return expand_classpath(opts);
}

CorpusRecipe parse_recipe(const std::string& text, unsigned seed) {
    CorpusRecipe recipe;
    recipe.seed = seed;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        std::size_t eq = field.find('=');
        if (eq == std::string::npos) throw CliError("bad recipe field '" + field + "', expected key=count");
        std::string key = field.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(field.substr(eq + 1));
        } catch (const std::exception&) {
            throw CliError("bad recipe count in '" + field + "'");
        }
        if (key == category::kConformant)
            recipe.conformant = value;
        else if (key == category::kMissingMethod)
            recipe.missing_method = value;
        else if (key == category::kMissingImport)
            recipe.missing_import = value;
        else if (key == category::kContainerDep)
            recipe.container_dep = value;
        else
            throw CliError("unknown recipe category '" + key + "'");
    }
    recipe.count = recipe.conformant + recipe.missing_method + recipe.missing_import + recipe.container_dep;
    if (recipe.count == 0) throw CliError("recipe describes no components");
    return recipe;
}

int run_verify(const CommonFlags& flags, const std::string& component_path) {
    SpecDocument spec = load_spec(flags.spec_path);
    std::string text = read_file(component_path);

    MatchReport report;
    try {
        ComponentModel model = parse_source(text, component_path);
        report = verify_component(spec, model, make_options(flags));
    } catch (const SourceParseError& e) {
        report = unparseable_report(component_path, spec.name, e.what());
    }

    if (flags.output_format == "structured")
        write_output(to_json(report).dump(2) + "\n", flags.out_path);
    else
        write_output(render_text(report), flags.out_path);
    return report.verdict ? 0 : 1;
}

int run_corpus_cmd(const CommonFlags& flags, const std::string& dir, bool recursive) {
    SpecDocument spec = load_spec(flags.spec_path);
    CorpusReport report = run_corpus(dir, spec, make_options(flags), recursive);

    if (flags.output_format == "structured")
        write_output(to_json(report).dump(2) + "\n", flags.out_path);
    else
        write_output(render_text(report), flags.out_path);
    return report.flagged == 0 ? 0 : 1;
}

int run_emit_xclass(const CommonFlags& flags, const std::string& type_name,
                    const std::string& component_path, bool print_compile_cmd) {
    SpecDocument spec = load_spec(flags.spec_path);

    std::string target_type = type_name;
    if (target_type.empty() && !component_path.empty()) {
        try {
            target_type = parse_source(read_file(component_path), component_path).type_name;
        } catch (const SourceParseError& e) {
            throw CliError("cannot derive type name from '" + component_path + "': " + e.what());
        }
    }
    if (target_type.empty()) target_type = "Component";

    HarnessSource harness = emit_xclass(spec, target_type);
    if (flags.out_path.empty()) {
        std::cout << harness.text;
    } else {
        write_output(harness.text, flags.out_path);
    }
    if (print_compile_cmd)
        std::cout << compile_command(spec, component_path.empty() ? target_type + ".java" : component_path)
                  << "\n";
    return 0;
}

int run_diff(const CommonFlags& flags, const std::string& to_path) {
    SpecDocument from = load_spec(flags.spec_path);
    SpecDocument to = load_spec(to_path);
    ModificationPlan plan = diff_specs(from, to);

    if (flags.output_format == "structured")
        write_output(to_json(plan).dump(2) + "\n", flags.out_path);
    else
        write_output(render_text(plan), flags.out_path);
    return 0;
}

int run_gen_corpus(const CommonFlags& flags, const std::string& out_dir, unsigned seed,
                   const std::string& recipe_text) {
    SpecDocument spec = load_spec(flags.spec_path);
    CorpusRecipe recipe = parse_recipe(recipe_text, seed);

    CorpusManifest manifest;
    try {
        manifest = generate_corpus(recipe, spec, out_dir);
    } catch (const std::invalid_argument& e) {
        throw CliError(std::string("bad recipe: ") + e.what());
    }
    std::cout << "generated " << manifest.entries.size() << " components in " << out_dir
              << " (manifest: " << (std::filesystem::path(out_dir) / kManifestFilename).generic_string()
              << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"specj - structural conformance verifier for software components"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* verify = app.add_subcommand("verify", "verify one component source against a specification");
    std::string component_path;
    verify->add_option("--spec", flags.spec_path, "SpecJ document")->required();
    verify->add_option("--component", component_path, "component source file")->required();
    add_verify_flags(verify, flags);
    add_output_flags(verify, flags);

    auto* corpus = app.add_subcommand("corpus", "verify every component source in a directory");
    std::string corpus_dir;
    bool recursive = false;
    corpus->add_option("--spec", flags.spec_path, "SpecJ document")->required();
    corpus->add_option("--dir", corpus_dir, "directory of component sources")->required();
    corpus->add_flag("--recursive", recursive, "descend into subdirectories");
    add_verify_flags(corpus, flags);
    add_output_flags(corpus, flags);

    auto* emit = app.add_subcommand("emit-xclass", "generate the checker harness for a specification");
    std::string type_name;
    std::string emit_component;
    bool print_compile_cmd = false;
    emit->add_option("--spec", flags.spec_path, "SpecJ document")->required();
    emit->add_option("--type", type_name, "component type name the harness references");
    emit->add_option("--component", emit_component, "component source to take the type name from");
    emit->add_flag("--compile-cmd", print_compile_cmd,
                   "also print the external compile command for the harness");
    emit->add_option("--out", flags.out_path, "write the harness to this file instead of stdout");

    auto* diff = app.add_subcommand("diff", "compute the modification plan between two specifications");
    std::string to_path;
    diff->add_option("--spec", flags.spec_path, "source SpecJ document")->required();
    diff->add_option("--to", to_path, "target SpecJ document")->required();
    add_output_flags(diff, flags);

    auto* gen = app.add_subcommand("gen-corpus", "generate a seeded synthetic corpus with a manifest");
    std::string gen_out_dir;
    unsigned seed = 0;
    std::string recipe_text;
    gen->add_option("--spec", flags.spec_path, "SpecJ document")->required();
    gen->add_option("--out", gen_out_dir, "output directory")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--recipe", recipe_text,
                    "category counts, e.g. conformant=45,missing_method=3,container_dep=2")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(flags, component_path);
        if (app.got_subcommand(corpus)) return run_corpus_cmd(flags, corpus_dir, recursive);
        if (app.got_subcommand(emit)) return run_emit_xclass(flags, type_name, emit_component, print_compile_cmd);
        if (app.got_subcommand(diff)) return run_diff(flags, to_path);
        if (app.got_subcommand(gen)) return run_gen_corpus(flags, gen_out_dir, seed, recipe_text);
    } catch (const std::exception& e) {
        std::cerr << "specj: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}

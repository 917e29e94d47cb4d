#include "specj/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "specj/source_parser.hpp"

namespace fs = std::filesystem;

namespace specj {

namespace {

constexpr const char* kContainerLibPool[] = {
    "org.container.runtime.Services",
    "org.container.runtime.PoolManager",
    "com.hostframework.spi.LifecycleHooks",
};

// Portable deterministic pick; std::uniform_int_distribution is
// implementation-defined.
std::size_t pick_below(std::mt19937& rng, std::size_t n) {
    return static_cast<std::size_t>(rng()) % n;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.generic_string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.generic_string() + "'");
    out << content;
    if (!out) throw IoError("cannot write '" + path.generic_string() + "'");
}

bool dependency_only_failure(const MatchReport& report) {
    if (report.verdict) return false;
    for (const PropertyResult& r : report.results) {
        if (r.status == PropertyStatus::Fail && r.kind != PropertyKind::Dependencies) return false;
    }
    return true;
}

std::string render_block_method(const Block& block) {
    std::vector<std::string> inputs = block.data_input.effective_types();
    std::vector<std::string> outputs = block.data_output.effective_types();

    std::string return_type = "void";
    if (!outputs.empty() && !outputs.front().empty()) return_type = outputs.front();

    std::string method = "    public " + return_type + " " + block.name + "(";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i) method += ", ";
        method += (inputs[i].empty() ? "Object" : inputs[i]) + " p" + std::to_string(i);
    }
    method += ")";
    if (!block.failure.empty()) method += " throws " + block.failure;
    method += " {\n    }\n";
    return method;
}

// True when "public static void main(String[] args)" satisfies the block,
// so the generator does not need a second method of the same name.
bool standalone_main_satisfies(const Block& block) {
    if (block.name != "main") return false;
    std::vector<std::string> inputs = block.data_input.effective_types();
    if (inputs.size() != 1 || TypeName::parse(inputs[0]) != TypeName{{"String"}, 1}) return false;
    std::vector<std::string> outputs = block.data_output.effective_types();
    bool void_out = outputs.empty() || outputs.front().empty() || outputs.front() == "void";
    return void_out && block.failure.empty();
}

std::string render_component(const SpecDocument& spec, const std::string& class_name,
                             const std::string& category, std::mt19937& rng,
                             const std::vector<std::string>& container_libs) {
    const PhysicalProperties& props = spec.properties;

    int deleted_block = -1;
    if (category == category::kMissingMethod)
        deleted_block = static_cast<int>(pick_below(rng, props.blocks.size()));
    int deleted_import = -1;
    if (category == category::kMissingImport)
        deleted_import = static_cast<int>(pick_below(rng, props.dependencies.size()));

    std::ostringstream out;
    out << "package corpus.generated;\n\n";

    for (std::size_t i = 0; i < props.dependencies.size(); ++i) {
        if (static_cast<int>(i) == deleted_import) continue;
        out << "import " << props.dependencies[i] << ";\n";
    }
    if (category == category::kContainerDep) {
        for (const std::string& lib : container_libs) out << "import " << lib << ";\n";
    }
    if (!props.dependencies.empty() || category == category::kContainerDep) out << "\n";

    char token[16];
    std::snprintf(token, sizeof token, "%08x", static_cast<unsigned>(rng()));
    out << "// corpus token " << token << "\n";
    out << "public class " << class_name << " {\n";

    std::vector<std::string> declared_fields;
    for (const Block& block : props.blocks) {
        if (!block.storage || block.storage->name.empty()) continue;
        if (std::find(declared_fields.begin(), declared_fields.end(), block.storage->name) !=
            declared_fields.end())
            continue;
        declared_fields.push_back(block.storage->name);
        out << "    private " << block.storage->type << " " << block.storage->name << ";\n";
    }
    if (!declared_fields.empty()) out << "\n";

    bool need_standalone_main = props.entry_point == "main";
    for (std::size_t i = 0; i < props.blocks.size(); ++i) {
        const Block& block = props.blocks[i];
        bool deleted = static_cast<int>(i) == deleted_block;
        if (need_standalone_main && standalone_main_satisfies(block)) {
            // The standalone entry doubles as this block's method; a deleted
            // "main" block removes both.
            need_standalone_main = !deleted;
            continue;
        }
        if (deleted) continue;
        out << render_block_method(block) << "\n";
    }

    if (need_standalone_main) out << "    public static void main(String[] args) {\n    }\n\n";

    out << "}\n";
    return out.str();
}

std::string component_class_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "Comp_%03d", index);
    return buf;
}

} // namespace

const ManifestEntry* CorpusManifest::entry_for(std::string_view filename) const {
    for (const ManifestEntry& e : entries) {
        if (e.path == filename) return &e;
    }
    return nullptr;
}

VerifyOptions expand_classpath(VerifyOptions opts) {
    std::vector<std::string> expanded;
    for (const std::string& entry : opts.classpath) {
        std::error_code ec;
        if (fs::is_directory(entry, ec)) {
            std::vector<std::string> files;
            for (const fs::directory_entry& item : fs::directory_iterator(entry, ec)) {
                if (item.is_regular_file()) files.push_back(item.path().generic_string());
            }
            std::sort(files.begin(), files.end());
            expanded.insert(expanded.end(), files.begin(), files.end());
        } else {
            expanded.push_back(entry);
        }
    }
    opts.classpath = std::move(expanded);
    return opts;
}

CorpusReport run_corpus(const fs::path& dir, const SpecDocument& spec, const VerifyOptions& opts,
                        bool recursive) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw IoError("'" + dir.generic_string() + "' is not a readable directory");

    std::vector<std::string> files;
    auto consider = [&](const fs::directory_entry& item) {
        if (item.is_regular_file() && item.path().extension() == ".java")
            files.push_back(item.path().generic_string());
    };
    try {
        if (recursive) {
            for (const fs::directory_entry& item : fs::recursive_directory_iterator(dir, ec)) consider(item);
        } else {
            for (const fs::directory_entry& item : fs::directory_iterator(dir, ec)) consider(item);
        }
    } catch (const fs::filesystem_error& e) {
        throw IoError("cannot list '" + dir.generic_string() + "': " + std::string(e.what()));
    }
    if (ec) throw IoError("cannot list '" + dir.generic_string() + "': " + ec.message());
    std::sort(files.begin(), files.end());

    // The corpus directory itself is on the classpath: components sit next
    // to the files and library stubs they ship with.
    VerifyOptions with_dir = opts;
    with_dir.classpath.push_back(dir.generic_string());
    VerifyOptions expanded = expand_classpath(with_dir);

    CorpusReport report;
    for (const std::string& file : files) {
        std::string text = read_file(file);
        MatchReport component_report;
        try {
            ComponentModel model = parse_source(text, file);
            component_report = verify_component(spec, model, expanded);
        } catch (const SourceParseError& e) {
            component_report = unparseable_report(file, spec.name, e.what());
        }
        report.reports.push_back(std::move(component_report));
    }

    report.total = static_cast<int>(report.reports.size());
    for (const MatchReport& r : report.reports) {
        if (r.verdict)
            ++report.matched;
        else
            ++report.flagged;
        if (dependency_only_failure(r)) ++report.dependency_only_failures;
    }
    return report;
}

CorpusManifest generate_corpus(const CorpusRecipe& recipe, const SpecDocument& spec,
                               const fs::path& out_dir) {
    if (recipe.conformant < 0 || recipe.missing_method < 0 || recipe.missing_import < 0 ||
        recipe.container_dep < 0)
        throw std::invalid_argument("recipe counts must be non-negative");
    if (recipe.conformant + recipe.missing_method + recipe.missing_import + recipe.container_dep !=
        recipe.count)
        throw std::invalid_argument("recipe category counts must sum to count");
    if (recipe.missing_method > 0 && spec.properties.blocks.empty())
        throw std::invalid_argument("missing_method components need a spec with blocks");
    if (recipe.missing_import > 0 && spec.properties.dependencies.empty())
        throw std::invalid_argument("missing_import components need a spec with dependencies");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir, ec)) throw IoError("cannot create '" + out_dir.generic_string() + "'");

    std::mt19937 rng(recipe.seed);

    CorpusManifest manifest;
    manifest.spec_name = spec.name;
    manifest.seed = recipe.seed;
    manifest.container_libs.push_back(
        kContainerLibPool[pick_below(rng, std::size(kContainerLibPool))]);

    std::vector<std::string> categories;
    categories.insert(categories.end(), recipe.conformant, category::kConformant);
    categories.insert(categories.end(), recipe.missing_method, category::kMissingMethod);
    categories.insert(categories.end(), recipe.missing_import, category::kMissingImport);
    categories.insert(categories.end(), recipe.container_dep, category::kContainerDep);
    for (std::size_t i = categories.size(); i > 1; --i)
        std::swap(categories[i - 1], categories[pick_below(rng, i)]);

    for (int i = 0; i < recipe.count; ++i) {
        const std::string& cat = categories[static_cast<std::size_t>(i)];
        std::string class_name = component_class_name(i);
        std::string file_name = class_name + ".java";
        write_file(out_dir / file_name,
                   render_component(spec, class_name, cat, rng, manifest.container_libs));

        ManifestEntry entry;
        entry.path = file_name;
        entry.category = cat;
        entry.expect_strict = cat == category::kConformant;
        entry.expect_covered = cat == category::kConformant || cat == category::kContainerDep;
        manifest.entries.push_back(std::move(entry));
    }

    // Bundle the spec's libraries so strict resolution succeeds against the
    // corpus directory; container libs are deliberately not bundled.
    for (const std::string& lib : spec.properties.dependencies)
        write_file(out_dir / (lib + ".lib"), "stub library " + lib + "\n");

    // Files the spec requires next to the components.
    for (const Block& block : spec.properties.blocks) {
        if (block.file && !block.file->name.empty())
            write_file(out_dir / block.file->expected_filename(), "generated file requirement\n");
    }
    const std::string& entry_point = spec.properties.entry_point;
    if (entry_point.find('.') != std::string::npos)
        write_file(out_dir / entry_point, "generated manifest\n");

    write_file(out_dir / kManifestFilename, manifest_to_text(manifest));
    return manifest;
}

std::string manifest_to_text(const CorpusManifest& manifest) {
    std::ostringstream out;
    out << "specj-corpus-manifest 1\n";
    out << "spec " << manifest.spec_name << "\n";
    out << "seed " << manifest.seed << "\n";
    for (const std::string& lib : manifest.container_libs) out << "container-lib " << lib << "\n";
    for (const ManifestEntry& e : manifest.entries) {
        out << "component " << e.path << " " << e.category << " " << (e.expect_strict ? "true" : "false")
            << " " << (e.expect_covered ? "true" : "false") << "\n";
    }
    return out.str();
}

CorpusManifest parse_manifest(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "specj-corpus-manifest 1")
        throw IoError("not a corpus manifest (bad header)");

    CorpusManifest manifest;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string keyword;
        fields >> keyword;
        if (keyword == "spec") {
            fields >> manifest.spec_name;
        } else if (keyword == "seed") {
            fields >> manifest.seed;
        } else if (keyword == "container-lib") {
            std::string lib;
            fields >> lib;
            manifest.container_libs.push_back(lib);
        } else if (keyword == "component") {
            ManifestEntry entry;
            std::string expect_strict, expect_covered;
            fields >> entry.path >> entry.category >> expect_strict >> expect_covered;
            if (fields.fail()) throw IoError("malformed manifest record: " + line);
            entry.expect_strict = expect_strict == "true";
            entry.expect_covered = expect_covered == "true";
            manifest.entries.push_back(std::move(entry));
        } else {
            throw IoError("unknown manifest keyword '" + keyword + "'");
        }
    }
    return manifest;
}

CorpusManifest load_manifest(const fs::path& path) {
    return parse_manifest(read_file(path));
}

} // namespace specj

// Batch verification of a directory of component sources against one spec,
// and generation of seeded synthetic corpora with a ground-truth manifest.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specj/conformance.hpp"
#include "specj/spec_model.hpp"

namespace specj {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusReport {
    int total = 0;
    int matched = 0;
    int flagged = 0;
    int dependency_only_failures = 0;        // sole failing property is Dependencies
    std::vector<MatchReport> reports;        // ordered by component path

    bool operator==(const CorpusReport&) const = default;
};

namespace category {
inline constexpr const char* kConformant = "conformant";
inline constexpr const char* kMissingMethod = "missing_method";
inline constexpr const char* kMissingImport = "missing_import";
inline constexpr const char* kContainerDep = "container_dep";
} // namespace category

struct CorpusRecipe {
    unsigned seed = 0;
    int count = 0;
    int conformant = 0;
    int missing_method = 0;
    int missing_import = 0;
    int container_dep = 0;
};

struct ManifestEntry {
    std::string path;            // corpus-relative file name
    std::string category;
    bool expect_strict = false;  // verdict under strict deps, no provided libs
    bool expect_covered = false; // verdict once provided libs cover the container libs

    bool operator==(const ManifestEntry&) const = default;
};

struct CorpusManifest {
    std::string spec_name;
    unsigned seed = 0;
    std::vector<std::string> container_libs;
    std::vector<ManifestEntry> entries;

    const ManifestEntry* entry_for(std::string_view filename) const;

    bool operator==(const CorpusManifest&) const = default;
};

inline constexpr const char* kManifestFilename = "manifest.txt";

// Replaces directory entries of the classpath with their contained files
// (non-recursive), so the conformance checks stay free of filesystem access.
VerifyOptions expand_classpath(VerifyOptions opts);

// Parses and verifies every *.java file in dir. The directory itself joins
// the classpath listing, so bundled .lib stubs and required files resolve
// without extra flags. Unparseable sources count as flagged with a Format
// fail. Deterministic: reports sorted by path.
CorpusReport run_corpus(const std::filesystem::path& dir, const SpecDocument& spec,
                        const VerifyOptions& opts, bool recursive = false);

// Writes `recipe.count` component sources derived from the spec into
// out_dir, along with bundled .lib stubs for the spec's dependencies and a
// manifest. Same seed, same bytes. Throws std::invalid_argument on a recipe
// whose category counts do not sum to count (or that the spec cannot
// support), IoError on write failure.
CorpusManifest generate_corpus(const CorpusRecipe& recipe, const SpecDocument& spec,
                               const std::filesystem::path& out_dir);

std::string manifest_to_text(const CorpusManifest& manifest);
CorpusManifest parse_manifest(std::string_view text);
CorpusManifest load_manifest(const std::filesystem::path& path);

} // namespace specj

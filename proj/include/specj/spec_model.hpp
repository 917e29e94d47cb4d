// SpecJ document model: the structural type name plus the physical
// properties a conforming component must exhibit. parse_spec/serialize_spec
// implement the canonical XML dialect documented in the README;
// validate_spec reports invariant violations as diagnostics.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specj {

// One entry of a Data_Input/Data_Output sequence. An empty type places no
// constraint on the matched parameter; the literal "null" places no value
// constraint (values are never checked statically).
struct Param {
    std::string type;
    std::string value = "null";

    bool operator==(const Param&) const = default;
};

struct ParamSeq {
    std::vector<Param> params;   // order significant

    // A sole entry with empty type and value "null" is the spelling for
    // "takes no parameters".
    bool is_none_marker() const;

    // Parameter types after normalizing the none marker away.
    std::vector<std::string> effective_types() const;

    bool operator==(const ParamSeq&) const = default;
};

struct FileReq {
    std::string name;
    std::string type;       // file extension / kind
    std::string sub_type;   // empty = unspecialized

    std::string expected_filename() const { return name + "." + type; }

    bool operator==(const FileReq&) const = default;
};

struct StorageReq {
    std::string name;
    std::string type;

    bool operator==(const StorageReq&) const = default;
};

// One required method of the structural interface.
struct Block {
    std::string name;
    ParamSeq data_input;
    ParamSeq data_output;            // at most one entry (the return slot)
    std::string failure;             // required thrown type; empty = none
    std::optional<FileReq> file;
    std::optional<StorageReq> storage;

    bool operator==(const Block&) const = default;
};

struct PhysicalProperties {
    std::vector<Block> blocks;                             // textual order
    std::vector<std::string> dependencies;                 // dotted lib paths
    std::string format;                                    // extension tag; empty = absent
    std::string entry_point;                               // extension tag; empty = absent
    std::optional<std::vector<std::string>> design_order;  // extension tag

    bool operator==(const PhysicalProperties&) const = default;
};

struct SpecDocument {
    std::string name;
    PhysicalProperties properties;

    const Block* find_block(std::string_view block_name) const;

    bool operator==(const SpecDocument&) const = default;
};

enum class SpecErrorKind { MalformedXml, SchemaError, DuplicateBlock };

class SpecError : public std::runtime_error {
public:
    SpecError(SpecErrorKind kind, const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

    SpecErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    SpecErrorKind kind_;
    int line_;
    int column_;
};

struct Diagnostic {
    std::string code;
    std::string subject;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

// Parses canonical SpecJ XML. Unknown tags, misplaced tags and attributes
// are SchemaError; ill-formed XML is MalformedXml; a repeated block name is
// DuplicateBlock.
SpecDocument parse_spec(std::string_view text);

// Canonical, deterministic rendering: parse_spec(serialize_spec(d)) == d
// for every document satisfying its invariants.
std::string serialize_spec(const SpecDocument& doc);

// Empty result iff all model invariants hold.
std::vector<Diagnostic> validate_spec(const SpecDocument& doc);

bool is_identifier(std::string_view s);
bool is_dotted_path(std::string_view s);

} // namespace specj

#include "specj/spec_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "specj/xml.hpp"

namespace specj {

namespace {

[[noreturn]] void schema_error(const xml::Element& at, const std::string& message) {
    throw SpecError(SpecErrorKind::SchemaError, message, at.line, at.column);
}

void reject_attributes(const xml::Element& e) {
    if (!e.attributes.empty())
        schema_error(e, "unexpected attribute '" + e.attributes.front().first + "' on <" + e.name + ">");
}

void reject_text(const xml::Element& e) {
    if (!e.text.empty())
        schema_error(e, "unexpected character data in <" + e.name + ">");
}

// Verifies that every child tag is in the allowed set and none of the
// single-occurrence tags repeats. The dialect fixes each tag's parent, so
// any stray or misplaced tag lands here.
void check_children(const xml::Element& e, const std::vector<std::string>& allowed,
                    const std::vector<std::string>& at_most_once) {
    for (const xml::Element& c : e.children) {
        if (std::find(allowed.begin(), allowed.end(), c.name) == allowed.end())
            schema_error(c, "tag <" + c.name + "> is not allowed inside <" + e.name + ">");
    }
    for (const std::string& tag : at_most_once) {
        if (e.count(tag) > 1)
            schema_error(e, "tag <" + tag + "> may appear at most once inside <" + e.name + ">");
    }
}

// A leaf carries character data only.
std::string leaf_text(const xml::Element& e) {
    reject_attributes(e);
    if (!e.children.empty())
        schema_error(e.children.front(), "tag <" + e.children.front().name + "> is not allowed inside <" + e.name + ">");
    return e.text;
}

ParamSeq parse_param_seq(const xml::Element& io) {
    reject_attributes(io);
    reject_text(io);
    check_children(io, {"sequence"}, {"sequence"});

    ParamSeq seq;
    const xml::Element* sequence = io.child("sequence");
    if (!sequence) return seq;

    reject_attributes(*sequence);
    reject_text(*sequence);
    check_children(*sequence, {"parameters"}, {});

    for (const xml::Element& group : sequence->children) {
        reject_attributes(group);
        reject_text(group);
        check_children(group, {"type", "Value"}, {"type", "Value"});

        Param p;
        if (const xml::Element* type = group.child("type")) p.type = leaf_text(*type);
        if (const xml::Element* value = group.child("Value"))
            p.value = leaf_text(*value);
        else
            p.value = "null";
        seq.params.push_back(std::move(p));
    }
    return seq;
}

std::string parse_failure(const xml::Element& e) {
    reject_attributes(e);
    reject_text(e);
    check_children(e, {"type"}, {"type"});
    if (const xml::Element* type = e.child("type")) return leaf_text(*type);
    return "";
}

std::optional<FileReq> parse_file(const xml::Element& e) {
    reject_attributes(e);
    reject_text(e);
    check_children(e, {"name", "type"}, {"name", "type"});

    FileReq req;
    if (const xml::Element* name = e.child("name")) req.name = leaf_text(*name);
    if (const xml::Element* type = e.child("type")) {
        // <type> is the one mixed-content spot: its own text is the generic
        // kind, an optional <sub-type> child specializes it.
        reject_attributes(*type);
        check_children(*type, {"sub-type"}, {"sub-type"});
        req.type = type->text;
        if (const xml::Element* sub = type->child("sub-type")) req.sub_type = leaf_text(*sub);
    }
    if (req.name.empty() && req.type.empty() && req.sub_type.empty()) return std::nullopt;
    return req;
}

std::optional<StorageReq> parse_storage(const xml::Element& e) {
    reject_attributes(e);
    reject_text(e);
    check_children(e, {"name", "type"}, {"name", "type"});

    StorageReq req;
    if (const xml::Element* name = e.child("name")) req.name = leaf_text(*name);
    if (const xml::Element* type = e.child("type")) {
        check_children(*type, {}, {});
        req.type = leaf_text(*type);
    }
    if (req.name.empty() && req.type.empty()) return std::nullopt;
    return req;
}

Block parse_block(const xml::Element& e) {
    reject_attributes(e);
    reject_text(e);
    check_children(e, {"name", "Data_Input", "Data_Output", "Failure", "File", "Storage"},
                   {"name", "Data_Input", "Data_Output", "Failure", "File", "Storage"});

    Block block;
    const xml::Element* name = e.child("name");
    if (!name) schema_error(e, "<Block> is missing <name>");
    block.name = leaf_text(*name);
    if (block.name.empty()) schema_error(*name, "<Block> has an empty <name>");

    if (const xml::Element* input = e.child("Data_Input")) block.data_input = parse_param_seq(*input);
    if (const xml::Element* output = e.child("Data_Output")) block.data_output = parse_param_seq(*output);
    if (const xml::Element* failure = e.child("Failure")) block.failure = parse_failure(*failure);
    if (const xml::Element* file = e.child("File")) block.file = parse_file(*file);
    if (const xml::Element* storage = e.child("Storage")) block.storage = parse_storage(*storage);
    return block;
}

bool contains_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

struct Writer {
    std::ostringstream out;
    int depth = 0;

    void line(const std::string& s) {
        for (int i = 0; i < depth; ++i) out << "  ";
        out << s << "\n";
    }

    void leaf(const std::string& tag, const std::string& text) {
        if (text.empty())
            line("<" + tag + " />");
        else
            line("<" + tag + ">" + xml::escape_text(text) + "</" + tag + ">");
    }

    void open(const std::string& tag) {
        line("<" + tag + ">");
        ++depth;
    }

    void close(const std::string& tag) {
        --depth;
        line("</" + tag + ">");
    }
};

void write_param_seq(Writer& w, const std::string& tag, const ParamSeq& seq) {
    if (seq.params.empty()) return;
    w.open(tag);
    w.open("sequence");
    for (const Param& p : seq.params) {
        w.open("parameters");
        w.leaf("type", p.type);
        w.leaf("Value", p.value);
        w.close("parameters");
    }
    w.close("sequence");
    w.close(tag);
}

void write_block(Writer& w, const Block& block) {
    w.open("Block");
    w.leaf("name", block.name);
    write_param_seq(w, "Data_Input", block.data_input);
    write_param_seq(w, "Data_Output", block.data_output);
    if (!block.failure.empty()) {
        w.open("Failure");
        w.leaf("type", block.failure);
        w.close("Failure");
    }
    if (block.file) {
        w.open("File");
        w.leaf("name", block.file->name);
        if (block.file->sub_type.empty()) {
            w.leaf("type", block.file->type);
        } else {
            w.line("<type>" + xml::escape_text(block.file->type) + "<sub-type>" +
                   xml::escape_text(block.file->sub_type) + "</sub-type></type>");
        }
        w.close("File");
    }
    if (block.storage) {
        w.open("Storage");
        w.leaf("name", block.storage->name);
        w.leaf("type", block.storage->type);
        w.close("Storage");
    }
    w.close("Block");
}

} // namespace

bool ParamSeq::is_none_marker() const {
    return params.size() == 1 && params[0].type.empty() && params[0].value == "null";
}

std::vector<std::string> ParamSeq::effective_types() const {
    std::vector<std::string> types;
    if (is_none_marker()) return types;
    types.reserve(params.size());
    for (const Param& p : params) types.push_back(p.type);
    return types;
}

const Block* SpecDocument::find_block(std::string_view block_name) const {
    for (const Block& b : properties.blocks) {
        if (b.name == block_name) return &b;
    }
    return nullptr;
}

SpecDocument parse_spec(std::string_view text) {
    xml::Element root;
    try {
        root = xml::parse_document(text);
    } catch (const xml::XmlError& e) {
        throw SpecError(SpecErrorKind::MalformedXml, e.what(), e.line(), e.column());
    }

    if (root.name != "SpecJ") schema_error(root, "root element must be <SpecJ>");
    reject_attributes(root);
    reject_text(root);
    check_children(root, {"name", "Physical_Properties"}, {"name", "Physical_Properties"});

    SpecDocument doc;
    const xml::Element* name = root.child("name");
    if (!name) schema_error(root, "missing <name>");
    doc.name = leaf_text(*name);
    if (doc.name.empty()) schema_error(*name, "missing <name>");
    if (contains_whitespace(doc.name)) schema_error(*name, "type name must not contain whitespace");

    const xml::Element* props = root.child("Physical_Properties");
    if (!props) schema_error(root, "missing <Physical_Properties>");
    reject_attributes(*props);
    reject_text(*props);
    check_children(*props, {"Block", "Dependencies", "Format", "Entry_Point", "Design_Order"},
                   {"Dependencies", "Format", "Entry_Point", "Design_Order"});

    std::set<std::string> seen_blocks;
    for (const xml::Element& child : props->children) {
        if (child.name != "Block") continue;
        Block block = parse_block(child);
        if (!seen_blocks.insert(block.name).second)
            throw SpecError(SpecErrorKind::DuplicateBlock, "duplicate block '" + block.name + "'",
                            child.line, child.column);
        doc.properties.blocks.push_back(std::move(block));
    }

    if (const xml::Element* deps = props->child("Dependencies")) {
        reject_attributes(*deps);
        reject_text(*deps);
        check_children(*deps, {"lib"}, {});
        for (const xml::Element& lib : deps->children) doc.properties.dependencies.push_back(leaf_text(lib));
    }

    if (const xml::Element* format = props->child("Format")) doc.properties.format = leaf_text(*format);
    if (const xml::Element* entry = props->child("Entry_Point")) doc.properties.entry_point = leaf_text(*entry);
    if (const xml::Element* design = props->child("Design_Order")) {
        reject_attributes(*design);
        reject_text(*design);
        check_children(*design, {"name"}, {});
        std::vector<std::string> order;
        for (const xml::Element& n : design->children) order.push_back(leaf_text(n));
        doc.properties.design_order = std::move(order);
    }

    return doc;
}

std::string serialize_spec(const SpecDocument& doc) {
    Writer w;
    const PhysicalProperties& props = doc.properties;

    w.open("SpecJ");
    w.leaf("name", doc.name);

    bool empty_props = props.blocks.empty() && props.dependencies.empty() && props.format.empty() &&
                       props.entry_point.empty() && !props.design_order;
    if (empty_props) {
        w.line("<Physical_Properties />");
    } else {
        w.open("Physical_Properties");
        if (!props.format.empty()) w.leaf("Format", props.format);
        if (!props.entry_point.empty()) w.leaf("Entry_Point", props.entry_point);
        if (props.design_order) {
            if (props.design_order->empty()) {
                w.line("<Design_Order />");
            } else {
                w.open("Design_Order");
                for (const std::string& n : *props.design_order) w.leaf("name", n);
                w.close("Design_Order");
            }
        }
        for (const Block& block : props.blocks) write_block(w, block);
        if (!props.dependencies.empty()) {
            w.open("Dependencies");
            for (const std::string& lib : props.dependencies) w.leaf("lib", lib);
            w.close("Dependencies");
        }
        w.close("Physical_Properties");
    }
    w.close("SpecJ");
    return w.out.str();
}

std::vector<Diagnostic> validate_spec(const SpecDocument& doc) {
    std::vector<Diagnostic> diags;
    auto add = [&](std::string code, std::string subject, std::string message) {
        diags.push_back({std::move(code), std::move(subject), std::move(message)});
    };

    if (doc.name.empty())
        add("EmptyName", "", "specification name is empty");
    else if (contains_whitespace(doc.name))
        add("NameWhitespace", doc.name, "specification name contains whitespace");

    const PhysicalProperties& props = doc.properties;

    std::set<std::string> block_names;
    for (const Block& block : props.blocks) {
        if (block.name.empty()) add("EmptyBlockName", "", "block with empty name");
        if (!block_names.insert(block.name).second)
            add("DuplicateBlock", block.name, "block '" + block.name + "' declared more than once");
        if (block.data_output.params.size() > 1)
            add("OutputArity", block.name,
                "block '" + block.name + "' declares more than one output parameter");
        if (block.file && block.file->name.empty())
            add("FileReqIncomplete", block.name, "file requirement of block '" + block.name + "' has no name");
        if (block.storage && (block.storage->name.empty() || block.storage->type.empty()))
            add("StorageReqIncomplete", block.name,
                "storage requirement of block '" + block.name + "' is missing name or type");
    }

    std::set<std::string> seen_deps;
    for (const std::string& lib : props.dependencies) {
        if (!is_dotted_path(lib)) add("BadLibPath", lib, "dependency '" + lib + "' is not a dotted path");
        if (!seen_deps.insert(lib).second)
            add("DuplicateDependency", lib, "dependency '" + lib + "' listed more than once");
    }

    // "main" is the standalone entry convention and a dotted name is a
    // manifest file; only plain names must resolve to a declared block.
    const std::string& entry = props.entry_point;
    if (!entry.empty() && entry != "main" && entry.find('.') == std::string::npos &&
        block_names.find(entry) == block_names.end())
        add("UnresolvedEntryPoint", entry, "entry point '" + entry + "' names no declared block");

    if (props.design_order) {
        for (const std::string& n : *props.design_order) {
            if (block_names.find(n) == block_names.end())
                add("UnresolvedDesignBlock", n, "design order entry '" + n + "' names no declared block");
        }
    }

    return diags;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto start = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    };
    auto part = [&](char c) { return start(c) || std::isdigit(static_cast<unsigned char>(c)); };
    if (!start(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), part);
}

bool is_dotted_path(std::string_view s) {
    std::size_t begin = 0;
    for (;;) {
        std::size_t dot = s.find('.', begin);
        std::string_view segment = s.substr(begin, dot == std::string_view::npos ? dot : dot - begin);
        if (!is_identifier(segment)) return false;
        if (dot == std::string_view::npos) return true;
        begin = dot + 1;
    }
}

} // namespace specj

// Structural model of one component source unit: exactly the facts the
// conformance engine matches against, nothing from method bodies.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace specj {

// Dialect tag of the accepted source grammar; the Format property compares
// a spec's <Format> value against it.
inline constexpr const char* kSourceFormatTag = "java";

struct TypeName {
    std::vector<std::string> segments;   // dotted name; generics stay in the segment text
    int array_dims = 0;

    static TypeName parse(std::string_view text);

    bool empty() const { return segments.empty(); }
    const std::string& last_segment() const { return segments.back(); }
    std::string str() const;

    bool operator==(const TypeName&) const = default;
};

enum Modifier : unsigned {
    kPublic = 1u << 0,
    kProtected = 1u << 1,
    kPrivate = 1u << 2,
    kStatic = 1u << 3,
    kFinal = 1u << 4,
    kAbstract = 1u << 5,
    kSynchronized = 1u << 6,
};

// Space-separated modifier keywords in declaration order.
std::string modifier_names(unsigned modifiers);

struct MethodSig {
    std::string name;
    unsigned modifiers = 0;
    TypeName return_type;                // empty for constructors
    std::vector<TypeName> params;        // order significant
    std::vector<TypeName> throws_list;

    bool operator==(const MethodSig&) const = default;
};

struct FieldSig {
    std::string name;
    TypeName type;
    unsigned modifiers = 0;

    bool operator==(const FieldSig&) const = default;
};

struct ComponentModel {
    std::string path;
    std::string package_name;
    std::vector<std::string> imports;    // dotted names, verbatim
    std::string type_name;
    std::vector<TypeName> super_types;   // extends/implements targets
    std::vector<MethodSig> methods;
    std::vector<FieldSig> fields;
    bool has_standalone_entry = false;   // public static void main(<array>)

    bool operator==(const ComponentModel&) const = default;
};

} // namespace specj

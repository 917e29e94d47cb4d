// Shared result vocabulary: the seven physical-property kinds, their
// checked/failed status and the findings attached to failures.
#pragma once

#include <string>
#include <vector>

namespace specj {

enum class PropertyKind {
    Format,
    EntryPoint,
    FaultHandler,
    Dependencies,
    DataIO,
    ControlFlow,
    Design,
};

inline constexpr int kPropertyKindCount = 7;

enum class PropertyStatus { Pass, Fail, NotSpecified };

const char* property_kind_name(PropertyKind kind);
const char* property_status_name(PropertyStatus status);

struct Finding {
    std::string code;
    std::string subject;
    std::string message;

    bool operator==(const Finding&) const = default;
};

struct PropertyResult {
    PropertyKind kind = PropertyKind::Format;
    PropertyStatus status = PropertyStatus::NotSpecified;
    std::vector<Finding> findings;
    std::string note;   // informational, e.g. the required activation sequence

    bool operator==(const PropertyResult&) const = default;
};

namespace finding_code {
inline constexpr const char* kMissingMethod = "MissingMethod";
inline constexpr const char* kWrongParams = "WrongParams";
inline constexpr const char* kWrongReturn = "WrongReturn";
inline constexpr const char* kMissingThrows = "MissingThrows";
inline constexpr const char* kMissingImport = "MissingImport";
inline constexpr const char* kUnresolvedDependency = "UnresolvedDependency";
inline constexpr const char* kWrongFormat = "WrongFormat";
inline constexpr const char* kMissingEntryPoint = "MissingEntryPoint";
inline constexpr const char* kMissingManifest = "MissingManifest";
inline constexpr const char* kUnresolvedEntryPoint = "UnresolvedEntryPoint";
inline constexpr const char* kMissingStorageField = "MissingStorageField";
inline constexpr const char* kDataAccessorPairing = "DataAccessorPairing";
inline constexpr const char* kMissingFile = "MissingFile";
inline constexpr const char* kMissingDesignMethod = "MissingDesignMethod";
inline constexpr const char* kParseError = "ParseError";
} // namespace finding_code

} // namespace specj

// Parser for the accepted component-source subset: package and import
// declarations, the first top-level class/interface with its fields and
// method signatures. Method bodies are scanned for balanced braces only and
// contribute nothing to the model.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "specj/source_model.hpp"

namespace specj {

class SourceParseError : public std::runtime_error {
public:
    SourceParseError(const std::string& message, int line, int column, std::string expected)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + "; expected " + expected + ")"),
          line_(line),
          column_(column),
          expected_(std::move(expected)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

// Total over arbitrary bytes: returns a model or throws SourceParseError.
ComponentModel parse_source(std::string_view text, std::string path = "");

// Deterministic sorted one-line-per-method rendering, e.g.
// "protected void onCreate(Bundle)".
std::string extract_signatures(const ComponentModel& model);

} // namespace specj

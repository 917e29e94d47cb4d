// Minimal strict XML reader/writer for the SpecJ dialect. Handles elements,
// attributes, character data, comments and the <?xml?> prolog; rejects
// everything else (DOCTYPE, CDATA) as malformed. Total over arbitrary byte
// input: the result is an element tree or an XmlError, never a crash.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specj::xml {

class XmlError : public std::runtime_error {
public:
    XmlError(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Element> children;
    std::string text;   // concatenated non-whitespace character data
    int line = 0;
    int column = 0;

    const Element* child(std::string_view tag) const;
    std::size_t count(std::string_view tag) const;
};

Element parse_document(std::string_view input);

// Escapes &, <, >, " and ' for use as character data.
std::string escape_text(std::string_view raw);

} // namespace specj::xml

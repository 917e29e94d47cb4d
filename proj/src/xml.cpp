#include "specj/xml.hpp"

#include <cctype>

namespace specj::xml {

namespace {

constexpr int kMaxDepth = 256;

struct Cursor {
    std::string_view data;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= data.size(); }
    char peek() const { return data[pos]; }

    bool starts_with(std::string_view s) const { return data.substr(pos, s.size()) == s; }

    char advance() {
        char c = data[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const { throw XmlError(message, line, column); }
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':';
}

void skip_whitespace(Cursor& cur) {
    while (!cur.eof() && is_space(cur.peek())) cur.advance();
}

void skip_comment(Cursor& cur) {
    // cur sits on "<!--"
    for (int i = 0; i < 4; ++i) cur.advance();
    while (!cur.eof()) {
        if (cur.starts_with("-->")) {
            cur.advance();
            cur.advance();
            cur.advance();
            return;
        }
        cur.advance();
    }
    cur.fail("unterminated comment");
}

void skip_processing_instruction(Cursor& cur) {
    // cur sits on "<?"
    cur.advance();
    cur.advance();
    while (!cur.eof()) {
        if (cur.starts_with("?>")) {
            cur.advance();
            cur.advance();
            return;
        }
        cur.advance();
    }
    cur.fail("unterminated processing instruction");
}

// Skips whitespace, comments and processing instructions between nodes.
void skip_misc(Cursor& cur) {
    for (;;) {
        skip_whitespace(cur);
        if (cur.starts_with("<!--")) {
            skip_comment(cur);
        } else if (cur.starts_with("<?")) {
            skip_processing_instruction(cur);
        } else {
            return;
        }
    }
}

std::string read_name(Cursor& cur) {
    if (cur.eof() || !is_name_start(cur.peek())) cur.fail("expected a name");
    std::string name;
    name.push_back(cur.advance());
    while (!cur.eof() && is_name_char(cur.peek())) name.push_back(cur.advance());
    return name;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

void decode_entity(Cursor& cur, std::string& out) {
    cur.advance(); // '&'
    std::string entity;
    while (!cur.eof() && cur.peek() != ';') {
        entity.push_back(cur.advance());
        if (entity.size() > 10) cur.fail("bad entity reference");
    }
    if (cur.eof()) cur.fail("unterminated entity reference");
    cur.advance(); // ';'

    if (entity == "amp") {
        out.push_back('&');
    } else if (entity == "lt") {
        out.push_back('<');
    } else if (entity == "gt") {
        out.push_back('>');
    } else if (entity == "quot") {
        out.push_back('"');
    } else if (entity == "apos") {
        out.push_back('\'');
    } else if (entity.size() > 1 && entity[0] == '#') {
        unsigned long cp = 0;
        bool hex = entity[1] == 'x' || entity[1] == 'X';
        std::size_t i = hex ? 2 : 1;
        if (i >= entity.size()) cur.fail("bad character reference");
        for (; i < entity.size(); ++i) {
            char c = entity[i];
            unsigned digit;
            if (c >= '0' && c <= '9') {
                digit = static_cast<unsigned>(c - '0');
            } else if (hex && c >= 'a' && c <= 'f') {
                digit = static_cast<unsigned>(c - 'a' + 10);
            } else if (hex && c >= 'A' && c <= 'F') {
                digit = static_cast<unsigned>(c - 'A' + 10);
            } else {
                cur.fail("bad character reference");
            }
            cp = cp * (hex ? 16 : 10) + digit;
            if (cp > 0x10FFFF) cur.fail("character reference out of range");
        }
        append_utf8(out, cp);
    } else {
        cur.fail("unknown entity '&" + entity + ";'");
    }
}

std::string read_quoted(Cursor& cur) {
    char quote = cur.advance();
    std::string value;
    while (!cur.eof() && cur.peek() != quote) {
        if (cur.peek() == '&') {
            decode_entity(cur, value);
        } else if (cur.peek() == '<') {
            cur.fail("'<' in attribute value");
        } else {
            value.push_back(cur.advance());
        }
    }
    if (cur.eof()) cur.fail("unterminated attribute value");
    cur.advance();
    return value;
}

bool all_whitespace(std::string_view s) {
    for (char c : s) {
        if (!is_space(c)) return false;
    }
    return true;
}

Element parse_element(Cursor& cur, int depth) {
    if (depth > kMaxDepth) cur.fail("element nesting too deep");

    Element elem;
    elem.line = cur.line;
    elem.column = cur.column;
    cur.advance(); // '<'
    elem.name = read_name(cur);

    // Attributes.
    for (;;) {
        skip_whitespace(cur);
        if (cur.eof()) cur.fail("unterminated start tag <" + elem.name + ">");
        char c = cur.peek();
        if (c == '/') {
            cur.advance();
            if (cur.eof() || cur.peek() != '>') cur.fail("expected '>' after '/'");
            cur.advance();
            return elem;
        }
        if (c == '>') {
            cur.advance();
            break;
        }
        if (!is_name_start(c)) cur.fail("expected attribute or '>' in <" + elem.name + ">");
        std::string attr_name = read_name(cur);
        skip_whitespace(cur);
        if (cur.eof() || cur.peek() != '=') cur.fail("expected '=' after attribute name");
        cur.advance();
        skip_whitespace(cur);
        if (cur.eof() || (cur.peek() != '"' && cur.peek() != '\'')) cur.fail("expected quoted attribute value");
        elem.attributes.emplace_back(std::move(attr_name), read_quoted(cur));
    }

    // Content.
    std::string pending_text;
    auto flush_text = [&]() {
        if (!all_whitespace(pending_text)) elem.text += pending_text;
        pending_text.clear();
    };

    for (;;) {
        if (cur.eof()) cur.fail("missing closing tag </" + elem.name + ">");
        char c = cur.peek();
        if (c == '<') {
            if (cur.starts_with("</")) {
                flush_text();
                cur.advance();
                cur.advance();
                std::string closing = read_name(cur);
                if (closing != elem.name)
                    cur.fail("mismatched closing tag </" + closing + ">, expected </" + elem.name + ">");
                skip_whitespace(cur);
                if (cur.eof() || cur.peek() != '>') cur.fail("expected '>' in closing tag");
                cur.advance();
                return elem;
            }
            if (cur.starts_with("<!--")) {
                flush_text();
                skip_comment(cur);
                continue;
            }
            if (cur.starts_with("<?")) {
                flush_text();
                skip_processing_instruction(cur);
                continue;
            }
            if (cur.starts_with("<!")) cur.fail("unsupported markup");
            flush_text();
            elem.children.push_back(parse_element(cur, depth + 1));
        } else if (c == '&') {
            decode_entity(cur, pending_text);
        } else {
            pending_text.push_back(cur.advance());
        }
    }
}

} // namespace

const Element* Element::child(std::string_view tag) const {
    for (const Element& c : children) {
        if (c.name == tag) return &c;
    }
    return nullptr;
}

std::size_t Element::count(std::string_view tag) const {
    std::size_t n = 0;
    for (const Element& c : children) {
        if (c.name == tag) ++n;
    }
    return n;
}

Element parse_document(std::string_view input) {
    Cursor cur{input};
    if (cur.starts_with("\xEF\xBB\xBF")) {
        cur.advance();
        cur.advance();
        cur.advance();
    }
    skip_misc(cur);
    if (cur.eof()) cur.fail("empty document");
    if (cur.peek() != '<') cur.fail("text before root element");
    if (cur.starts_with("<!")) cur.fail("unsupported markup");
    Element root = parse_element(cur, 0);
    skip_misc(cur);
    if (!cur.eof()) cur.fail("content after root element");
    return root;
}

std::string escape_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

} // namespace specj::xml

#include "specj/source_parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace specj {

namespace {

// Blanks line and block comments (preserving newlines and column positions)
// before tokenizing. String and character literals are honoured so their
// contents never look like comment markers.
std::string strip_comments(std::string_view text) {
    std::string out(text);
    enum class State { Code, Line, Block, Str, Chr } state = State::Code;

    for (std::size_t i = 0; i < out.size(); ++i) {
        char c = out[i];
        char next = i + 1 < out.size() ? out[i + 1] : '\0';
        switch (state) {
            case State::Code:
                if (c == '/' && next == '/') {
                    state = State::Line;
                    out[i] = ' ';
                } else if (c == '/' && next == '*') {
                    state = State::Block;
                    out[i] = ' ';
                } else if (c == '"') {
                    state = State::Str;
                } else if (c == '\'') {
                    state = State::Chr;
                }
                break;
            case State::Line:
                if (c == '\n')
                    state = State::Code;
                else
                    out[i] = ' ';
                break;
            case State::Block:
                if (c == '*' && next == '/') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    ++i;
                    state = State::Code;
                } else if (c != '\n') {
                    out[i] = ' ';
                }
                break;
            case State::Str:
                if (c == '\\' && next != '\0')
                    ++i;
                else if (c == '"' || c == '\n')
                    state = State::Code;
                break;
            case State::Chr:
                if (c == '\\' && next != '\0')
                    ++i;
                else if (c == '\'' || c == '\n')
                    state = State::Code;
                break;
        }
    }
    return out;
}

const std::map<std::string, unsigned, std::less<>>& modifier_keywords() {
    static const std::map<std::string, unsigned, std::less<>> keywords = {
        {"public", kPublic},     {"protected", kProtected}, {"private", kPrivate},
        {"static", kStatic},     {"final", kFinal},         {"abstract", kAbstract},
        {"synchronized", kSynchronized},
    };
    return keywords;
}

struct Scanner {
    std::string text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    struct State {
        std::size_t pos;
        int line;
        int column;
    };

    State save() const { return {pos, line, column}; }
    void restore(const State& s) {
        pos = s.pos;
        line = s.line;
        column = s.column;
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
        throw SourceParseError(message, line, column, expected);
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    }
    static bool ident_part(char c) {
        return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    }

    bool at_ident() {
        skip_ws();
        return !eof() && ident_start(peek());
    }

    std::string read_ident(const std::string& what) {
        skip_ws();
        if (eof() || !ident_start(peek())) fail("expected " + what, "identifier");
        std::string ident;
        ident.push_back(advance());
        while (!eof() && ident_part(peek())) ident.push_back(advance());
        return ident;
    }

    void expect(char c, const std::string& context) {
        skip_ws();
        if (eof() || peek() != c)
            fail("unexpected " + (eof() ? std::string("end of input") : "'" + std::string(1, peek()) + "'") +
                     " in " + context,
                 "'" + std::string(1, c) + "'");
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    // Raw text of a balanced <...> group, used to keep generics inside a
    // type token. No string literals can occur here in the subset.
    std::string absorb_generics() {
        std::string raw;
        int depth = 0;
        do {
            if (eof()) fail("unterminated type argument list", "'>'");
            char c = advance();
            if (c == '<') ++depth;
            if (c == '>') --depth;
            raw.push_back(c);
        } while (depth > 0);
        return raw;
    }

    void skip_string(char quote) {
        while (!eof()) {
            char c = advance();
            if (c == '\\' && !eof()) {
                advance();
            } else if (c == quote || c == '\n') {
                return;
            }
        }
    }

    // Consumes a balanced {...} body; literal strings are honoured so a
    // quoted brace never unbalances the scan.
    void skip_braced_block() {
        expect('{', "block");
        int depth = 1;
        while (!eof()) {
            char c = advance();
            if (c == '"' || c == '\'')
                skip_string(c);
            else if (c == '{')
                ++depth;
            else if (c == '}' && --depth == 0)
                return;
        }
        fail("unbalanced braces", "'}'");
    }

    void skip_parenthesized() {
        expect('(', "annotation");
        int depth = 1;
        while (!eof()) {
            char c = advance();
            if (c == '"' || c == '\'')
                skip_string(c);
            else if (c == '(')
                ++depth;
            else if (c == ')' && --depth == 0)
                return;
        }
        fail("unbalanced parentheses", "')'");
    }

    // Skips a field initializer up to (not including) a ',' or ';' at
    // nesting depth zero. A '<' immediately followed by a name character
    // counts as a type-argument opener so constructor calls like
    // "new HashMap<String, Integer>()" keep their commas; a spaced '<' is a
    // comparison and stays flat. A ';' always ends the initializer.
    void skip_initializer() {
        int depth = 0;
        int angle = 0;
        while (!eof()) {
            char c = peek();
            if (depth == 0 && c == ';') return;
            if (depth == 0 && angle == 0 && c == ',') return;
            advance();
            if (c == '"' || c == '\'') {
                skip_string(c);
            } else if (c == '(' || c == '[' || c == '{') {
                ++depth;
            } else if (c == ')' || c == ']' || c == '}') {
                if (--depth < 0) fail("unbalanced initializer", "',' or ';'");
            } else if (c == '<' && !eof()) {
                char next = peek();
                if (next == '<')
                    advance();   // shift operator
                else if (ident_start(next) || next == '?')
                    ++angle;
            } else if (c == '>' && angle > 0) {
                --angle;
            }
        }
        fail("unterminated initializer", "';'");
    }
};

class Parser {
public:
    Parser(std::string_view text, std::string path) {
        scan_.text = strip_comments(text);
        model_.path = std::move(path);
    }

    ComponentModel run() {
        parse_package_and_imports();
        parse_type_declaration();
        finalize_entry_flag();
        return std::move(model_);
    }

private:
    Scanner scan_;
    ComponentModel model_;

    void skip_annotations() {
        for (;;) {
            scan_.skip_ws();
            if (scan_.eof() || scan_.peek() != '@') return;
            scan_.advance();
            scan_.read_ident("annotation name");
            while (scan_.accept('.')) scan_.read_ident("annotation name");
            scan_.skip_ws();
            if (!scan_.eof() && scan_.peek() == '(') scan_.skip_parenthesized();
        }
    }

    unsigned read_modifiers() {
        unsigned mods = 0;
        for (;;) {
            skip_annotations();
            if (!scan_.at_ident()) return mods;
            Scanner::State checkpoint = scan_.save();
            std::string word = scan_.read_ident("member");
            auto it = modifier_keywords().find(word);
            if (it == modifier_keywords().end()) {
                scan_.restore(checkpoint);
                return mods;
            }
            mods |= it->second;
        }
    }

    std::string read_dotted(bool allow_star, const std::string& what) {
        std::string name = scan_.read_ident(what);
        while (scan_.accept('.')) {
            scan_.skip_ws();
            if (allow_star && !scan_.eof() && scan_.peek() == '*') {
                scan_.advance();
                name += ".*";
                return name;
            }
            name += "." + scan_.read_ident(what);
        }
        return name;
    }

    TypeName read_type(const std::string& what) {
        TypeName type;
        std::string segment = scan_.read_ident(what);
        if (!scan_.eof() && scan_.peek() == '<') segment += scan_.absorb_generics();
        type.segments.push_back(std::move(segment));
        for (;;) {
            Scanner::State checkpoint = scan_.save();
            if (!scan_.accept('.')) break;
            scan_.skip_ws();
            if (scan_.eof() || !Scanner::ident_start(scan_.peek())) {
                scan_.restore(checkpoint);
                break;
            }
            std::string next = scan_.read_ident(what);
            if (!scan_.eof() && scan_.peek() == '<') next += scan_.absorb_generics();
            type.segments.push_back(std::move(next));
        }
        type.array_dims += read_dims();
        return type;
    }

    int read_dims() {
        int dims = 0;
        while (scan_.accept('[')) {
            scan_.expect(']', "array type");
            ++dims;
        }
        return dims;
    }

    void parse_package_and_imports() {
        skip_annotations();
        scan_.skip_ws();

        Scanner::State checkpoint = scan_.save();
        if (scan_.at_ident()) {
            std::string word = scan_.read_ident("declaration");
            if (word == "package") {
                model_.package_name = read_dotted(false, "package name");
                scan_.expect(';', "package declaration");
            } else {
                scan_.restore(checkpoint);
            }
        }

        for (;;) {
            while (scan_.accept(';')) {
            }
            checkpoint = scan_.save();
            if (!scan_.at_ident()) return;
            std::string word = scan_.read_ident("declaration");
            if (word != "import") {
                scan_.restore(checkpoint);
                return;
            }
            model_.imports.push_back(read_dotted(true, "import name"));
            scan_.expect(';', "import declaration");
        }
    }

    void parse_type_declaration() {
        skip_annotations();
        read_modifiers();
        scan_.skip_ws();
        if (scan_.eof()) scan_.fail("missing type declaration", "'class' or 'interface'");

        std::string keyword = scan_.read_ident("type declaration");
        if (keyword != "class" && keyword != "interface")
            scan_.fail("expected a type declaration, got '" + keyword + "'", "'class' or 'interface'");

        std::string name = scan_.read_ident("type name");
        if (!scan_.eof() && scan_.peek() == '<') name += scan_.absorb_generics();
        model_.type_name = name;

        scan_.skip_ws();
        while (scan_.at_ident()) {
            Scanner::State checkpoint = scan_.save();
            std::string word = scan_.read_ident("supertype clause");
            if (word != "extends" && word != "implements") {
                scan_.restore(checkpoint);
                break;
            }
            do {
                model_.super_types.push_back(read_type("supertype name"));
            } while (scan_.accept(','));
        }

        scan_.expect('{', "type body");
        parse_members();
    }

    void parse_members() {
        for (;;) {
            scan_.skip_ws();
            if (scan_.eof()) scan_.fail("unterminated type body", "'}'");
            if (scan_.peek() == '}') {
                scan_.advance();
                return;   // first top-level type only; the rest of the file is ignored
            }
            if (scan_.accept(';')) continue;

            unsigned mods = read_modifiers();
            scan_.skip_ws();
            if (scan_.eof()) scan_.fail("unterminated type body", "'}'");
            if (scan_.peek() == '{') {
                scan_.skip_braced_block();   // static or instance initializer
                continue;
            }

            TypeName type = read_type("member type");
            scan_.skip_ws();
            if (!scan_.eof() && scan_.peek() == '(') {
                if (type.segments.size() == 1 && type.array_dims == 0 &&
                    type.segments[0] == model_.type_name) {
                    parse_method(mods, TypeName{}, model_.type_name);   // constructor
                    continue;
                }
                scan_.fail("expected member name before '('", "identifier");
            }

            std::string name = scan_.read_ident("member name");
            scan_.skip_ws();
            if (!scan_.eof() && scan_.peek() == '(') {
                parse_method(mods, std::move(type), std::move(name));
            } else {
                parse_field(mods, std::move(type), std::move(name));
            }
        }
    }

    void parse_method(unsigned mods, TypeName return_type, std::string name) {
        MethodSig sig;
        sig.name = std::move(name);
        sig.modifiers = mods;
        sig.return_type = std::move(return_type);

        scan_.expect('(', "method declaration");
        scan_.skip_ws();
        if (!scan_.accept(')')) {
            for (;;) {
                skip_annotations();
                Scanner::State checkpoint = scan_.save();
                if (scan_.at_ident() && scan_.read_ident("parameter") != "final") scan_.restore(checkpoint);
                TypeName ptype = read_type("parameter type");
                scan_.read_ident("parameter name");
                ptype.array_dims += read_dims();
                sig.params.push_back(std::move(ptype));
                if (scan_.accept(',')) continue;
                scan_.expect(')', "parameter list");
                break;
            }
        }

        scan_.skip_ws();
        if (scan_.at_ident()) {
            Scanner::State checkpoint = scan_.save();
            std::string word = scan_.read_ident("throws clause");
            if (word == "throws") {
                do {
                    sig.throws_list.push_back(read_type("thrown type"));
                } while (scan_.accept(','));
            } else {
                scan_.restore(checkpoint);
            }
        }

        scan_.skip_ws();
        if (scan_.eof()) scan_.fail("unterminated method declaration", "'{' or ';'");
        if (scan_.peek() == ';')
            scan_.advance();
        else if (scan_.peek() == '{')
            scan_.skip_braced_block();
        else
            scan_.fail("malformed method declaration", "'{' or ';'");

        model_.methods.push_back(std::move(sig));
    }

    void parse_field(unsigned mods, TypeName type, std::string first_name) {
        std::string name = std::move(first_name);
        for (;;) {
            FieldSig field;
            field.name = std::move(name);
            field.type = type;
            field.type.array_dims += read_dims();
            field.modifiers = mods;
            model_.fields.push_back(std::move(field));

            scan_.skip_ws();
            if (scan_.accept('=')) scan_.skip_initializer();
            if (scan_.accept(',')) {
                name = scan_.read_ident("field name");
                continue;
            }
            scan_.expect(';', "field declaration");
            return;
        }
    }

    void finalize_entry_flag() {
        const TypeName void_type{{"void"}, 0};
        for (const MethodSig& m : model_.methods) {
            if (m.name == "main" && (m.modifiers & kPublic) && (m.modifiers & kStatic) &&
                m.return_type == void_type && m.params.size() == 1 && m.params[0].array_dims >= 1) {
                model_.has_standalone_entry = true;
                return;
            }
        }
    }
};

} // namespace

TypeName TypeName::parse(std::string_view text) {
    auto is_ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!text.empty() && is_ws(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_ws(text.back())) text.remove_suffix(1);

    TypeName type;
    std::string segment;
    int angle_depth = 0;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '<') ++angle_depth;
        if (c == '>') --angle_depth;
        if (angle_depth == 0 && c == '[') break;
        if (angle_depth == 0 && c == '.') {
            type.segments.push_back(segment);
            segment.clear();
            continue;
        }
        segment.push_back(c);
    }
    if (!segment.empty()) type.segments.push_back(segment);
    for (; i < text.size(); ++i) {
        if (text[i] == '[') ++type.array_dims;
    }
    return type;
}

std::string TypeName::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out.push_back('.');
        out += segments[i];
    }
    for (int i = 0; i < array_dims; ++i) out += "[]";
    return out;
}

std::string modifier_names(unsigned modifiers) {
    static constexpr std::pair<Modifier, const char*> kOrder[] = {
        {kPublic, "public"},     {kProtected, "protected"}, {kPrivate, "private"},
        {kStatic, "static"},     {kFinal, "final"},         {kAbstract, "abstract"},
        {kSynchronized, "synchronized"},
    };
    std::string out;
    for (auto [flag, word] : kOrder) {
        if (modifiers & flag) {
            if (!out.empty()) out.push_back(' ');
            out += word;
        }
    }
    return out;
}

ComponentModel parse_source(std::string_view text, std::string path) {
    return Parser(text, std::move(path)).run();
}

std::string extract_signatures(const ComponentModel& model) {
    std::vector<std::string> lines;
    lines.reserve(model.methods.size());
    for (const MethodSig& m : model.methods) {
        std::string line = modifier_names(m.modifiers);
        if (!m.return_type.empty()) {
            if (!line.empty()) line.push_back(' ');
            line += m.return_type.str();
        }
        if (!line.empty()) line.push_back(' ');
        line += m.name;
        line.push_back('(');
        for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i) line += ", ";
            line += m.params[i].str();
        }
        line.push_back(')');
        if (!m.throws_list.empty()) {
            line += " throws ";
            for (std::size_t i = 0; i < m.throws_list.size(); ++i) {
                if (i) line += ", ";
                line += m.throws_list[i].str();
            }
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());

    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out.push_back('\n');
    }
    return out;
}

} // namespace specj

#include <doctest.h>

#include <string>

#include "specj/xml.hpp"

using namespace specj::xml;

TEST_CASE("elements, attributes, text") {
    Element root = parse_document("<a x=\"1\" y='two'><b>hello</b><c /></a>");
    CHECK(root.name == "a");
    REQUIRE(root.attributes.size() == 2);
    CHECK(root.attributes[0] == std::pair<std::string, std::string>{"x", "1"});
    CHECK(root.attributes[1] == std::pair<std::string, std::string>{"y", "two"});
    REQUIRE(root.children.size() == 2);
    CHECK(root.child("b")->text == "hello");
    CHECK(root.child("c")->text.empty());
    CHECK(root.count("b") == 1);
    CHECK(root.child("missing") == nullptr);
}

TEST_CASE("entities decode, including numeric references") {
    Element root = parse_document("<a>&lt;tag&gt; &amp; &quot;x&quot; &apos;y&apos; &#65;&#x42;</a>");
    CHECK(root.text == "<tag> & \"x\" 'y' AB");
}

TEST_CASE("escape_text survives a parse round-trip") {
    std::string nasty = "a<b & \"c\" 'd' >e";
    Element root = parse_document("<t>" + escape_text(nasty) + "</t>");
    CHECK(root.text == nasty);
}

TEST_CASE("prolog, comments and processing instructions are skipped") {
    Element root = parse_document(
        "<?xml version=\"1.0\"?>\n<!-- top -->\n<a><!-- inner -->x<?pi data?>y</a>\n<!-- tail -->");
    CHECK(root.name == "a");
    CHECK(root.text == "xy");
}

TEST_CASE("whitespace between child elements is structural, inner text is verbatim") {
    Element root = parse_document("<a>\n  <b> padded </b>\n</a>");
    CHECK(root.text.empty());
    CHECK(root.child("b")->text == " padded ");
}

TEST_CASE("mixed text around children concatenates") {
    Element root = parse_document("<t>xml<s>m</s>tail</t>");
    CHECK(root.text == "xmltail");
    CHECK(root.child("s")->text == "m");
}

TEST_CASE("positions are tracked") {
    Element root = parse_document("<a>\n  <b />\n</a>");
    CHECK(root.line == 1);
    REQUIRE(root.children.size() == 1);
    CHECK(root.children[0].line == 2);
    CHECK(root.children[0].column == 3);
}

TEST_CASE("malformed documents fail with positions") {
    auto fails_at_line = [](const char* text, int line) {
        try {
            (void)parse_document(text);
            return false;
        } catch (const XmlError& e) {
            return e.line() == line;
        }
    };

    CHECK(fails_at_line("", 1));
    CHECK(fails_at_line("just text", 1));
    CHECK(fails_at_line("<a><b></a>", 1));
    CHECK(fails_at_line("<a>\n<b>\n</a>", 3));
    CHECK(fails_at_line("<a><a/><b/>", 1));          // unterminated root
    CHECK(fails_at_line("<a/><b/>", 1));             // two roots
    CHECK(fails_at_line("<a foo></a>", 1));          // attribute without value
    CHECK(fails_at_line("<a>&weird;</a>", 1));       // unknown entity
    CHECK(fails_at_line("<a><![CDATA[x]]></a>", 1)); // unsupported markup
    CHECK(fails_at_line("<!DOCTYPE a><a/>", 1));
}

TEST_CASE("nesting depth is capped") {
    std::string deep;
    for (int i = 0; i < 1000; ++i) deep += "<a>";
    CHECK_THROWS_AS((void)parse_document(deep), XmlError);
}

TEST_CASE("utf-8 byte order mark is tolerated") {
    Element root = parse_document("\xEF\xBB\xBF<a>x</a>");
    CHECK(root.text == "x");
}

#include <doctest.h>

#include <random>

#include "specj/source_parser.hpp"
#include "support/generators.hpp"
#include "support/testutil.hpp"

using namespace specj;

namespace {

const char* kLifecycleSource = R"(import android.intent.action.MAIN;

public class LifecycleActivity {

    protected void onCreate(Bundle savedInstanceState) {
    }

    protected void onStart() {
    }

    protected void onRestart() {
    }

    protected void onResume() {
    }

    protected void onPause() {
    }

    protected void onStop() {
    }

    protected void onDestroy() {
    }
}
)";

} // namespace

TEST_CASE("empty class") {
    ComponentModel model = parse_source("class A {}");
    CHECK(model.type_name == "A");
    CHECK(model.methods.empty());
    CHECK(model.fields.empty());
    CHECK_FALSE(model.has_standalone_entry);
    CHECK(extract_signatures(model).empty());
}

TEST_CASE("lifecycle signatures") {
    ComponentModel model = parse_source(kLifecycleSource);
    CHECK(model.type_name == "LifecycleActivity");
    CHECK(model.imports == std::vector<std::string>{"android.intent.action.MAIN"});
    REQUIRE(model.methods.size() == 7);

    const MethodSig& on_create = model.methods[0];
    CHECK(on_create.name == "onCreate");
    CHECK(on_create.modifiers == kProtected);
    CHECK(on_create.return_type == TypeName{{"void"}, 0});
    REQUIRE(on_create.params.size() == 1);
    CHECK(on_create.params[0] == TypeName{{"Bundle"}, 0});

    std::vector<std::string> names;
    for (const MethodSig& m : model.methods) {
        names.push_back(m.name);
        if (m.name != "onCreate") CHECK(m.params.empty());
        CHECK(m.return_type == TypeName{{"void"}, 0});
    }
    CHECK(names == std::vector<std::string>{"onCreate", "onStart", "onRestart", "onResume", "onPause",
                                            "onStop", "onDestroy"});
}

TEST_CASE("signature listing is sorted and deterministic") {
    ComponentModel model = parse_source(kLifecycleSource);
    std::string listing = extract_signatures(model);
    CHECK(listing ==
          "protected void onCreate(Bundle)\n"
          "protected void onDestroy()\n"
          "protected void onPause()\n"
          "protected void onRestart()\n"
          "protected void onResume()\n"
          "protected void onStart()\n"
          "protected void onStop()\n");
    CHECK(listing == extract_signatures(parse_source(kLifecycleSource)));

    // Injective on what it renders: any rendered field changing changes the
    // listing.
    ComponentModel tweaked = model;
    tweaked.methods[0].params[0] = TypeName{{"Intent"}, 0};
    CHECK(extract_signatures(tweaked) != listing);
    tweaked = model;
    tweaked.methods[1].modifiers = kPublic;
    CHECK(extract_signatures(tweaked) != listing);
}

TEST_CASE("standalone entry detection") {
    CHECK(parse_source("public class M { public static void main(String[] args) {} }").has_standalone_entry);
    CHECK(parse_source("class M { static public void main(String args[]) {} }").has_standalone_entry);

    CHECK_FALSE(parse_source("class M { public void main(String[] a) {} }").has_standalone_entry);
    CHECK_FALSE(parse_source("class M { public static int main(String[] a) { return 0; } }")
                    .has_standalone_entry);
    CHECK_FALSE(parse_source("class M { public static void main(String a) {} }").has_standalone_entry);
    CHECK_FALSE(parse_source("class M { public static void main(String[] a, int b) {} }")
                    .has_standalone_entry);
}

TEST_CASE("package, fields, constructors, throws") {
    ComponentModel model = parse_source(R"(
package org.acme.widgets;

import java.io.Serializable;

public final class Widget extends Base implements Serializable, Cloneable {
    private int x;
    protected static final String NAME = "widget";
    int a, b = 7, c;

    Widget() {
    }

    public Widget(int x) {
    }

    public synchronized void run() throws RemoteException, java.io.IOException {
    }

    public int getX() { return x; }
}
)");

    CHECK(model.package_name == "org.acme.widgets");
    CHECK(model.type_name == "Widget");
    REQUIRE(model.super_types.size() == 3);
    CHECK(model.super_types[0] == TypeName{{"Base"}, 0});
    CHECK(model.super_types[1] == TypeName{{"Serializable"}, 0});

    REQUIRE(model.fields.size() == 5);
    CHECK(model.fields[0] == FieldSig{"x", TypeName{{"int"}, 0}, kPrivate});
    CHECK(model.fields[1] == FieldSig{"NAME", TypeName{{"String"}, 0}, kProtected | kStatic | kFinal});
    CHECK(model.fields[2].name == "a");
    CHECK(model.fields[3].name == "b");
    CHECK(model.fields[4].name == "c");

    REQUIRE(model.methods.size() == 4);
    CHECK(model.methods[0].name == "Widget");
    CHECK(model.methods[0].return_type.empty());
    CHECK(model.methods[1].name == "Widget");
    REQUIRE(model.methods[1].params.size() == 1);
    CHECK(model.methods[2].name == "run");
    CHECK(model.methods[2].modifiers == (kPublic | kSynchronized));
    REQUIRE(model.methods[2].throws_list.size() == 2);
    CHECK(model.methods[2].throws_list[0] == TypeName{{"RemoteException"}, 0});
    CHECK(model.methods[2].throws_list[1] == TypeName{{"java", "io", "IOException"}, 0});
    CHECK(model.methods[3].name == "getX");
    CHECK(model.methods[3].return_type == TypeName{{"int"}, 0});
}

TEST_CASE("field initializers are skipped, including awkward ones") {
    ComponentModel model = parse_source(R"(
class A {
    Map<String, Integer> index = new HashMap<String, Integer>();
    int lo = f(1, 2), hi = 3;
    int shifted = 1 << 4;
    boolean cmp = a < b;
    int[] table = {1, 2, 3};
    String tricky = "a,b;c}";
}
)");
    REQUIRE(model.fields.size() == 7);
    CHECK(model.fields[0].name == "index");
    CHECK(model.fields[0].type.str() == "Map<String, Integer>");
    CHECK(model.fields[1].name == "lo");
    CHECK(model.fields[2].name == "hi");
    CHECK(model.fields[3].name == "shifted");
    CHECK(model.fields[4].name == "cmp");
    CHECK(model.fields[5].name == "table");
    CHECK(model.fields[6].name == "tricky");
}

TEST_CASE("generics ride along inside the type token") {
    ComponentModel model = parse_source(
        "class A { java.util.Map<String, java.util.List<Integer>> index(List<String> keys) { return null; } }");
    REQUIRE(model.methods.size() == 1);
    CHECK(model.methods[0].return_type.str() == "java.util.Map<String, java.util.List<Integer>>");
    REQUIRE(model.methods[0].params.size() == 1);
    CHECK(model.methods[0].params[0].str() == "List<String>");
}

TEST_CASE("annotations are tolerated and ignored") {
    ComponentModel model = parse_source(R"(
@Deprecated
@SuppressWarnings("all, of, them")
public class A {
    @Override
    public void run(@Named("x") int x) {
    }
}
)");
    CHECK(model.type_name == "A");
    REQUIRE(model.methods.size() == 1);
    CHECK(model.methods[0].name == "run");
}

TEST_CASE("interfaces and abstract methods") {
    ComponentModel model = parse_source("interface Runner { void run(); int size(); }");
    CHECK(model.type_name == "Runner");
    REQUIRE(model.methods.size() == 2);
    CHECK(model.methods[0].name == "run");
}

TEST_CASE("bodies are opaque") {
    std::string base = "class A { void f() {BODY} int g() { return 1; } }";
    ComponentModel reference = parse_source("class A { void f() {} int g() { return 1; } }");

    const char* bodies[] = {
        "",
        "int x = 0; while (x < 3) { x++; }",
        "String s = \"}}}{{{\"; char c = '}';",
        "if (a) { b(); } else { c(); } /* }}} */",
        "do { f(\"{\"); } while (false);\n        // line comment with }}}\n",
        "Object o = new Object() { }; /* nested {} */",
    };
    for (const char* body : bodies) {
        std::string text = base;
        text.replace(text.find("BODY"), 4, body);
        CAPTURE(body);
        ComponentModel model = parse_source(text);
        CHECK(model == reference);
    }
}

TEST_CASE("comments are stripped before tokenizing") {
    ComponentModel model = parse_source(R"(
// header comment with class Junk {
/* block comment
   class MoreJunk { */
class A /* inline */ {
    // field int zap;
    int real;
}
)");
    CHECK(model.type_name == "A");
    REQUIRE(model.fields.size() == 1);
    CHECK(model.fields[0].name == "real");
}

TEST_CASE("only the first top-level type is modeled") {
    ComponentModel model = parse_source("class A { void f() {} } class B { void g() {} }");
    CHECK(model.type_name == "A");
    REQUIRE(model.methods.size() == 1);
    CHECK(model.methods[0].name == "f");
}

TEST_CASE("parse errors carry position and expectation") {
    SUBCASE("unbalanced braces") {
        try {
            parse_source("class A { void f() { ");
            FAIL("expected SourceParseError");
        } catch (const SourceParseError& e) {
            CHECK(e.expected() == "'}'");
            CHECK(e.line() >= 1);
        }
    }
    SUBCASE("missing type declaration") {
        CHECK_THROWS_AS(parse_source("package a.b;"), SourceParseError);
        CHECK_THROWS_AS(parse_source(""), SourceParseError);
    }
    SUBCASE("malformed signature") {
        CHECK_THROWS_AS(parse_source("class A { void () {} }"), SourceParseError);
        CHECK_THROWS_AS(parse_source("class A { void f( {} }"), SourceParseError);
    }
    SUBCASE("column information") {
        try {
            parse_source("class A ;");
            FAIL("expected SourceParseError");
        } catch (const SourceParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() >= 8);
        }
    }
}

TEST_CASE("parser is total over arbitrary bytes") {
    std::mt19937 rng(77001);
    std::string seed_text = kLifecycleSource;

    for (int i = 0; i < 2000; ++i) {
        std::string input;
        if (i % 2 == 0) {
            std::size_t len = testgen::pick(rng, 240);
            for (std::size_t k = 0; k < len; ++k) input.push_back(static_cast<char>(rng() % 256));
        } else {
            input = seed_text;
            std::size_t mutations = 1 + testgen::pick(rng, 10);
            for (std::size_t m = 0; m < mutations && !input.empty(); ++m) {
                switch (testgen::pick(rng, 3)) {
                    case 0: input[testgen::pick(rng, input.size())] = static_cast<char>(rng() % 256); break;
                    case 1: input.insert(testgen::pick(rng, input.size()), 1, static_cast<char>(rng() % 256)); break;
                    default: input.erase(testgen::pick(rng, input.size()), 1); break;
                }
            }
        }
        try {
            ComponentModel model = parse_source(input);
            // Accepted input: a second parse must give the same signatures.
            CHECK(extract_signatures(model) == extract_signatures(parse_source(input)));
        } catch (const SourceParseError&) {
        }
    }
}

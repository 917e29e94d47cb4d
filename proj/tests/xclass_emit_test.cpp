#include <doctest.h>

#include <random>
#include <sstream>

#include "specj/source_parser.hpp"
#include "specj/xclass_emit.hpp"
#include "support/generators.hpp"
#include "support/testutil.hpp"

using namespace specj;

namespace {

SpecDocument ejb_spec() {
    return parse_spec(testutil::read_file(testutil::fixture_dir() / "ejb.specj.xml"));
}

std::string line_at(const std::string& text, int line_number) {
    std::istringstream in(text);
    std::string line;
    for (int i = 0; i < line_number; ++i) {
        if (!std::getline(in, line)) return "";
    }
    return line;
}

} // namespace

TEST_CASE("EJB harness") {
    HarnessSource harness = emit_xclass(ejb_spec(), "MyBean");

    CHECK(harness.imports ==
          std::vector<std::string>{"javax.ejb.SessionBean", "javax.ejb.SessionContext"});
    CHECK(harness.text.find("import javax.ejb.SessionBean;") != std::string::npos);
    CHECK(harness.text.find("import javax.ejb.SessionContext;") != std::string::npos);
    CHECK(harness.text.find("MyBean target;") != std::string::npos);
    CHECK(harness.text.find("target.ejbCreate();") != std::string::npos);
    CHECK(harness.text.find("target.ejbRemove();") != std::string::npos);

    REQUIRE(harness.probes.size() == 2);
    CHECK(harness.probes[0].block == "ejbCreate");
    CHECK(harness.probes[1].block == "ejbRemove");

    // Probe line numbers point at the invocation statements.
    CHECK(line_at(harness.text, harness.probes[0].line).find("target.ejbCreate()") != std::string::npos);
    CHECK(line_at(harness.text, harness.probes[1].line).find("target.ejbRemove()") != std::string::npos);
}

TEST_CASE("empty spec gives a harness with a type reference and no probes") {
    SpecDocument spec = parse_spec("<SpecJ><name>Empty</name><Physical_Properties/></SpecJ>");
    HarnessSource harness = emit_xclass(spec, "Component");
    CHECK(harness.probes.empty());
    CHECK(harness.imports.empty());
    CHECK(harness.text.find("Component target;") != std::string::npos);

    ComponentModel model = parse_source(harness.text);
    CHECK(model.type_name == "XClass_Empty");
}

TEST_CASE("inputs, outputs and failure handlers") {
    SpecDocument spec = parse_spec(
        "<SpecJ><name>Io</name><Physical_Properties>"
        "<Block><name>resize</name>"
        "<Data_Input><sequence>"
        "<parameters><type>int</type></parameters>"
        "<parameters><type>Bundle</type></parameters>"
        "</sequence></Data_Input>"
        "<Data_Output><sequence><parameters><type>long</type></parameters></sequence></Data_Output>"
        "<Failure><type>RemoteException</type></Failure>"
        "</Block>"
        "</Physical_Properties></SpecJ>");

    HarnessSource harness = emit_xclass(spec, "Target");
    CHECK(harness.text.find("int resize_p0;") != std::string::npos);
    CHECK(harness.text.find("Bundle resize_p1;") != std::string::npos);
    CHECK(harness.text.find("long resize_ret = target.resize(resize_p0, resize_p1);") != std::string::npos);
    CHECK(harness.text.find("try {") != std::string::npos);
    CHECK(harness.text.find("} catch (RemoteException resize_failure) {") != std::string::npos);
    CHECK(line_at(harness.text, harness.probes.at(0).line).find("target.resize(") != std::string::npos);
}

TEST_CASE("component type name must be an identifier") {
    CHECK_THROWS_AS(emit_xclass(ejb_spec(), "My Bean"), InvalidIdentifier);
    CHECK_THROWS_AS(emit_xclass(ejb_spec(), ""), InvalidIdentifier);
    CHECK_THROWS_AS(emit_xclass(ejb_spec(), "9Bean"), InvalidIdentifier);
}

TEST_CASE("default filename and compile command") {
    CHECK(default_harness_filename(ejb_spec()) == "XClass_EJB.java");
    CHECK(compile_command(ejb_spec(), "MyBean.java") == "javac XClass_EJB.java MyBean.java");
}

TEST_CASE("generated specs: probe/import counts, determinism, self-parse") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 60; ++i) {
        SpecDocument spec = testgen::random_spec(rng);
        HarnessSource harness = emit_xclass(spec, "Target");

        CAPTURE(i);
        CHECK(harness.probes.size() == spec.properties.blocks.size());
        CHECK(harness.imports.size() == spec.properties.dependencies.size());
        CHECK(emit_xclass(spec, "Target").text == harness.text);

        ComponentModel model = parse_source(harness.text);
        CHECK(model.imports == spec.properties.dependencies);
        REQUIRE(model.methods.size() == 1);
        CHECK(model.methods[0].name == "probeAll");
    }
}

#include <doctest.h>

#include <random>

#include "specj/report_io.hpp"
#include "specj/source_parser.hpp"
#include "support/generators.hpp"
#include "support/source_builder.hpp"
#include "support/testutil.hpp"

using namespace specj;

namespace {

MatchReport sample_report(bool conformant) {
    SpecDocument spec = parse_spec(testutil::read_file(testutil::fixture_dir() / "ejb.specj.xml"));
    std::string source = conformant
                             ? testutil::read_file(testutil::fixture_dir() / "MyBean.java")
                             : "import javax.ejb.SessionBean;\nclass Partial { public void ejbCreate() {} }";
    return verify_component(spec, parse_source(source, conformant ? "MyBean.java" : "Partial.java"), {});
}

} // namespace

TEST_CASE("match report JSON round-trip") {
    for (bool conformant : {true, false}) {
        MatchReport report = sample_report(conformant);
        CHECK(match_report_from_json(to_json(report)) == report);

        // Through text: what the CLI writes is what a consumer reparses.
        std::string dumped = to_json(report).dump(2);
        CHECK(match_report_from_json(nlohmann::json::parse(dumped)) == report);
    }
}

TEST_CASE("corpus report JSON round-trip") {
    CorpusReport report;
    report.total = 2;
    report.matched = 1;
    report.flagged = 1;
    report.dependency_only_failures = 0;
    report.reports.push_back(sample_report(true));
    report.reports.push_back(sample_report(false));
    CHECK(corpus_report_from_json(to_json(report)) == report);
}

TEST_CASE("modification plan JSON round-trip over generated pairs") {
    std::mt19937 rng(60601);
    for (int i = 0; i < 60; ++i) {
        ModificationPlan plan = diff_specs(testgen::random_spec(rng), testgen::random_spec(rng));
        CAPTURE(i);
        REQUIRE(plan_from_json(to_json(plan)) == plan);
    }
}

TEST_CASE("text rendering") {
    MatchReport good = sample_report(true);
    std::string text = render_text(good);
    CHECK(text.find("verdict: true") != std::string::npos);
    CHECK(text.find("level: usage") != std::string::npos);
    CHECK(text.find("data-io") != std::string::npos);

    MatchReport bad = sample_report(false);
    std::string bad_text = render_text(bad);
    CHECK(bad_text.find("verdict: false") != std::string::npos);
    CHECK(bad_text.find("MissingMethod ejbRemove") != std::string::npos);
    CHECK(bad_text.find("MissingImport javax.ejb.SessionContext") != std::string::npos);

    ModificationPlan empty_plan;
    CHECK(render_text(empty_plan) == "modification plan: no changes\n");
}

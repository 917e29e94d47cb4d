#include <doctest.h>

#include <random>

#include "specj/spec_diff.hpp"
#include "support/generators.hpp"
#include "support/testutil.hpp"

using namespace specj;

namespace {

SpecDocument load(const char* name) {
    return parse_spec(testutil::read_file(testutil::fixture_dir() / name));
}

} // namespace

TEST_CASE("diff of a spec with itself is empty") {
    SpecDocument ejb = load("ejb.specj.xml");
    CHECK(diff_specs(ejb, ejb).empty());
    CHECK(apply_plan(ejb, ModificationPlan{}) == ejb);
}

TEST_CASE("EJB to Android plan") {
    SpecDocument ejb = load("ejb.specj.xml");
    SpecDocument android = load("android.specj.xml");

    ModificationPlan plan = diff_specs(ejb, android);
    CHECK(plan.remove_blocks == std::vector<std::string>{"ejbCreate", "ejbRemove"});
    REQUIRE(plan.add_blocks.size() == 7);
    CHECK(plan.add_blocks[0].name == "onCreate");
    CHECK(plan.add_blocks[6].name == "onDestroy");
    CHECK(plan.change_blocks.empty());
    CHECK(plan.remove_deps ==
          std::vector<std::string>{"javax.ejb.SessionBean", "javax.ejb.SessionContext"});
    CHECK(plan.add_deps == std::vector<std::string>{"android.intent.action.MAIN"});
    CHECK_FALSE(plan.set_extensions.has_value());

    SpecDocument rebuilt = apply_plan(ejb, plan);
    rebuilt.name = android.name;   // the plan edits properties, not the type name
    CHECK(canonicalized(rebuilt) == canonicalized(android));
}

TEST_CASE("changed blocks are keyed by name") {
    SpecDocument from = load("ejb.specj.xml");
    SpecDocument to = from;
    to.properties.blocks[1].failure = "RemoteException";

    ModificationPlan plan = diff_specs(from, to);
    CHECK(plan.add_blocks.empty());
    CHECK(plan.remove_blocks.empty());
    REQUIRE(plan.change_blocks.size() == 1);
    CHECK(plan.change_blocks[0].name == "ejbRemove");
    CHECK(apply_plan(from, plan) == to);
}

TEST_CASE("extension fields are replaced as a set") {
    SpecDocument from = load("ejb.specj.xml");
    SpecDocument to = from;
    to.properties.entry_point = "main";
    to.properties.design_order = std::vector<std::string>{"ejbCreate"};

    ModificationPlan plan = diff_specs(from, to);
    REQUIRE(plan.set_extensions.has_value());
    CHECK(plan.set_extensions->entry_point == "main");
    CHECK(apply_plan(from, plan) == to);
}

TEST_CASE("plan conflicts") {
    SpecDocument ejb = load("ejb.specj.xml");

    SUBCASE("removing a nonexistent block") {
        ModificationPlan plan;
        plan.remove_blocks.push_back("foo");
        CHECK_THROWS_WITH_AS(apply_plan(ejb, plan), doctest::Contains("foo"), PlanConflict);
    }
    SUBCASE("adding a colliding block") {
        ModificationPlan plan;
        Block b;
        b.name = "ejbCreate";
        plan.add_blocks.push_back(b);
        CHECK_THROWS_AS(apply_plan(ejb, plan), PlanConflict);
    }
    SUBCASE("removing a nonexistent dependency") {
        ModificationPlan plan;
        plan.remove_deps.push_back("no.such.Lib");
        CHECK_THROWS_AS(apply_plan(ejb, plan), PlanConflict);
    }
    SUBCASE("block named in two edit lists") {
        ModificationPlan plan;
        plan.remove_blocks.push_back("ejbCreate");
        Block b;
        b.name = "ejbCreate";
        plan.add_blocks.push_back(b);
        CHECK_THROWS_AS(apply_plan(ejb, plan), PlanConflict);
    }
    SUBCASE("edits leaving the document invalid") {
        SpecDocument with_order = ejb;
        with_order.properties.design_order = std::vector<std::string>{"ejbCreate"};
        ModificationPlan plan;
        plan.remove_blocks.push_back("ejbCreate");
        CHECK_THROWS_AS(apply_plan(with_order, plan), PlanConflict);
    }
}

TEST_CASE("diff/apply round-trip over generated pairs") {
    std::mt19937 rng(20260808);
    for (int i = 0; i < 120; ++i) {
        SpecDocument a = testgen::random_spec(rng);
        SpecDocument b = testgen::random_spec(rng);

        CHECK(diff_specs(a, a).empty());

        ModificationPlan plan = diff_specs(a, b);
        SpecDocument rebuilt = apply_plan(a, plan);
        rebuilt.name = b.name;
        CAPTURE(i);
        REQUIRE(canonicalized(rebuilt) == canonicalized(b));
        CHECK(validate_spec(rebuilt).empty());
    }
}

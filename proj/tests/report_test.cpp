#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centrex/bus.hpp"
#include "centrex/ges.hpp"
#include "centrex/report.hpp"

using namespace centrex;

namespace {

ProblemInstance fixture() {
    ProblemInstance p;
    p.graph = Graph(5, false, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    p.tokens = {"a", "b", "c", "d", "e"};
    p.targets = {2};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 2;
    return p;
}

} // namespace

TEST_CASE("reports carry the schema and an embedded instance") {
    const ProblemInstance p = fixture();
    const SelectionReport report = run_ges(p);
    const auto doc = report_to_json(report, p);
    CHECK(doc.at("schema") == kReportSchema);
    CHECK(doc.at("algorithm") == "ges");
    CHECK(doc.at("coverage").at("before") == report.coverage_before.covered);
    CHECK(doc.at("coverage").at("after") == report.coverage_after.covered);
    CHECK(doc.contains("iterations"));
}

TEST_CASE("the embedded instance re-parses to an equivalent problem") {
    const ProblemInstance p = fixture();
    const SelectionReport report = run_ges(p);
    const std::string text = report_to_string(report, p);

    const ProblemInstance round = instance_from_report(text);
    CHECK(round.graph == p.graph);
    CHECK(round.targets == p.targets);
    CHECK(round.candidates == p.candidates);
    CHECK(round.budget == p.budget);
    CHECK(round.setting == p.setting);
    CHECK(round.tokens == p.tokens);
}

TEST_CASE("serialization is byte-stable") {
    const ProblemInstance p = fixture();
    const SelectionReport report = run_ges(p);
    CHECK(report_to_string(report, p) == report_to_string(report, p));
}

TEST_CASE("timings only appear on request") {
    const ProblemInstance p = fixture();
    SelectionReport report = run_ges(p);
    report.timings_ms["select"] = 12.5;

    const auto quiet = report_to_json(report, p);
    CHECK_FALSE(quiet.at("environment").contains("timings-ms"));

    const auto loud = report_to_json(report, p, nullptr, /*include_timings=*/true);
    CHECK(loud.at("environment").at("timings-ms").at("select") == 12.5);
}

TEST_CASE("sampled runs embed their plan") {
    const ProblemInstance p = fixture();
    SamplePlan plan;
    plan.formula = SamplePlan::Formula::budget_only;
    plan.epsilon = 0.3;
    plan.confidence_l = 1;
    plan.sample_count = sample_size_budget_only(1, p.budget, p.candidates.size(), 0.3);
    const SelectionReport report = run_bus(p, plan, 7);

    const auto doc = report_to_json(report, p, &plan);
    CHECK(doc.at("plan").at("formula") == "budget-only");
    CHECK(doc.at("plan").at("epsilon") == 0.3);
    CHECK(doc.at("plan").at("log-base") == "natural");
    CHECK(doc.at("sampling").at("uncovered-count-source") == "estimated");
    for (const auto &it : doc.at("iterations"))
        CHECK(it.at("gain-kind") == "sampled");
}

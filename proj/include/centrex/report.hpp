#ifndef CENTREX_REPORT_HPP_
#define CENTREX_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "centrex/bus.hpp"
#include "centrex/instance_io.hpp"
#include "centrex/problem.hpp"

namespace centrex {

inline constexpr const char *kReportSchema = "centrex-report/1";

// JSON report with the instance embedded for replay. Deterministic by
// construction: everything inside is a pure function of instance, flags and
// seed. Wall-clock timings are therefore left out unless explicitly asked
// for; reproducibility checks compare report bytes.
inline nlohmann::ordered_json report_to_json(const SelectionReport &report, const ProblemInstance &instance,
                                             const SamplePlan *plan = nullptr,
                                             bool include_timings = false) {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["algorithm"] = report.algorithm;
    doc["instance"] = serialize_instance(instance);

    if (plan) {
        nlohmann::ordered_json j;
        j["formula"] = to_string(plan->formula);
        j["samples"] = report.sample_count;
        if (plan->formula == SamplePlan::Formula::opt_bound ||
            plan->formula == SamplePlan::Formula::budget_only) {
            j["epsilon"] = plan->epsilon;
            j["confidence-l"] = plan->confidence_l;
            j["log-base"] = "natural";
        }
        if (plan->opt_bound)
            j["opt-bound"] = *plan->opt_bound;
        doc["plan"] = j;
    }

    nlohmann::ordered_json iterations = nlohmann::ordered_json::array();
    for (const IterationRecord &it : report.iterations) {
        nlohmann::ordered_json j;
        j["iteration"] = it.iteration;
        j["candidate-index"] = it.candidate_index;
        j["edge"] = instance.token_of(it.edge.u) + " " + instance.token_of(it.edge.v);
        j["gain"] = it.gain;
        j["gain-kind"] = it.heuristic ? "unscored" : (it.sampled ? "sampled" : "exact");
        if (it.sampled && !it.heuristic)
            j["gain-scaled"] = it.scaled_gain;
        iterations.push_back(j);
    }
    doc["iterations"] = iterations;

    nlohmann::ordered_json selection = nlohmann::ordered_json::array();
    for (const Edge &e : report.selected_edges)
        selection.push_back(instance.token_of(e.u) + " " + instance.token_of(e.v));
    doc["selection"] = selection;

    nlohmann::ordered_json coverage;
    coverage["pair-convention"] = report.coverage_before.ordered_pairs ? "ordered" : "unordered";
    coverage["universe"] = report.coverage_before.universe;
    coverage["before"] = report.coverage_before.covered;
    coverage["after"] = report.coverage_after.covered;
    coverage["gain"] = report.exact_gain();
    coverage["uncovered-before"] = report.coverage_before.uncovered;
    coverage["uncovered-after"] = report.coverage_after.uncovered;
    coverage["before-ordered"] = report.coverage_before.covered_ordered();
    coverage["after-ordered"] = report.coverage_after.covered_ordered();
    coverage["uncovered-before-ordered"] = report.coverage_before.uncovered_ordered();
    doc["coverage"] = coverage;

    if (report.sample_count > 0) {
        nlohmann::ordered_json sampling;
        sampling["samples"] = report.sample_count;
        sampling["draws"] = report.sample_draws;
        if (!report.uncovered_count_source.empty()) {
            sampling["uncovered-count"] = report.uncovered_count_used;
            sampling["uncovered-count-source"] = report.uncovered_count_source;
        }
        doc["sampling"] = sampling;
    }

    if (!report.warnings.empty())
        doc["warnings"] = report.warnings;

    nlohmann::ordered_json environment;
    environment["seed"] = report.seed;
    if (include_timings) {
        nlohmann::ordered_json timings;
        for (const auto &[phase, ms] : report.timings_ms)
            timings[phase] = ms;
        environment["timings-ms"] = timings;
    }
    doc["environment"] = environment;
    return doc;
}

inline std::string report_to_string(const SelectionReport &report, const ProblemInstance &instance,
                                    const SamplePlan *plan = nullptr, bool include_timings = false) {
    return report_to_json(report, instance, plan, include_timings).dump(2) + "\n";
}

// Re-parse the instance embedded in a serialized report.
inline ProblemInstance instance_from_report(const std::string &report_text) {
    const auto doc = nlohmann::json::parse(report_text);
    return parse_instance(doc.at("instance").get<std::string>()).instance;
}

} // namespace centrex

#endif // CENTREX_REPORT_HPP_

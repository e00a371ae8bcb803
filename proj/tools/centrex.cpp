// centrex: group coverage centrality optimization by edge addition.
//
// Subcommands:
//   optimize    pick up to k candidate edges for a target node set
//   verify      run the statistical property suites
//   experiment  sweep configurations and emit a CSV

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centrex/baselines.hpp"
#include "centrex/bus.hpp"
#include "centrex/generators.hpp"
#include "centrex/ges.hpp"
#include "centrex/instance_io.hpp"
#include "centrex/metrics.hpp"
#include "centrex/oracle.hpp"
#include "centrex/report.hpp"
#include "centrex/verify.hpp"

using namespace centrex;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

struct OptimizeArgs {
    std::string graph_path;
    std::string algo;
    int k = 0;
    std::string target_nodes;
    int target_random = 0;
    std::string candidates = "auto-s1";
    std::string pairs = "all";
    bool directed = false;
    std::uint64_t seed = 1;
    int threads = 0;
    double epsilon = 0.0;
    int confidence_l = 1;
    double opt_bound = 0.0;
    std::string samples; // integer, "exhaustive" or "256xk"
    std::size_t acc_samples = 1000;
    bool stop_on_zero_gain = false;
    bool assume_unique_coverage = false;
    bool with_metrics = false;
    long long metric_samples = -1; // -1: exhaustive when small, sampled otherwise
    double ic_prob = 0.1;
    std::size_t ic_trials = 1000;
    bool timings = false;
    std::string out = "centrex-report.json";
};

LoadResult load_graph_file(const std::string &path, bool directed) {
    std::ifstream in(path);
    if (!in.good())
        throw ParseError("cannot open graph file '" + path + "'");
    return load_edge_list(in, directed);
}

std::vector<NodeId> resolve_targets(const OptimizeArgs &args, const LoadResult &loaded) {
    std::vector<NodeId> targets;
    if (!args.target_nodes.empty()) {
        for (const std::string &token : split_list(args.target_nodes)) {
            const auto it = loaded.token_ids.find(token);
            if (it == loaded.token_ids.end())
                throw ValidationError({"unknown target node '" + token + "'"});
            targets.push_back(it->second);
        }
    } else if (args.target_random > 0) {
        Rng rng(args.seed ^ 0x7a52637005f9d0adULL);
        const NodeId n = loaded.graph.node_count();
        if (static_cast<NodeId>(args.target_random) >= n)
            throw ValidationError({"random target count must leave at least one outside node"});
        while (targets.size() < static_cast<std::size_t>(args.target_random)) {
            const NodeId v = static_cast<NodeId>(rng.below(n));
            if (std::find(targets.begin(), targets.end(), v) == targets.end())
                targets.push_back(v);
        }
    } else {
        throw ValidationError({"targets required: pass --target-nodes or --target-random"});
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    return targets;
}

ProblemInstance assemble_instance(const OptimizeArgs &args, const LoadResult &loaded,
                                  const std::vector<NodeId> &targets) {
    ProblemInstance p;
    p.graph = loaded.graph;
    p.tokens = loaded.tokens;
    p.targets = targets;
    p.budget = args.k;
    p.assume_unique_edge_coverage = args.assume_unique_coverage;

    if (args.candidates == "auto-s1") {
        p.setting = args.directed ? Setting::s4_directed : Setting::s1;
        p.candidates = build_candidates(p.graph, p.targets, p.setting);
    } else if (args.candidates == "auto-s0") {
        p.setting = args.directed ? Setting::s3_directed : Setting::s0;
        p.candidates = build_candidates(p.graph, p.targets, p.setting);
    } else if (args.candidates.rfind("file:", 0) == 0) {
        const std::string path = args.candidates.substr(5);
        std::ifstream in(path);
        if (!in.good())
            throw ParseError("cannot open candidate file '" + path + "'");
        std::string line;
        std::size_t line_no = 0;
        const auto mask = make_mask(p.graph.node_count(), p.targets);
        bool all_incident = true;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.resize(hash);
            std::istringstream fields(line);
            std::string a, b;
            if (!(fields >> a))
                continue;
            if (!(fields >> b))
                throw ParseError("candidate file line " + std::to_string(line_no) +
                                 ": expected two node tokens");
            const auto ia = loaded.token_ids.find(a);
            const auto ib = loaded.token_ids.find(b);
            if (ia == loaded.token_ids.end() || ib == loaded.token_ids.end())
                throw ParseError("candidate file line " + std::to_string(line_no) +
                                 ": unknown node token");
            NodeId u = ia->second, v = ib->second;
            if (!args.directed && u > v)
                std::swap(u, v);
            all_incident &= (mask[u] || mask[v]);
            p.candidates.push_back({u, v});
        }
        p.setting = args.directed ? (all_incident ? Setting::s4_directed : Setting::s3_directed)
                                  : (all_incident ? Setting::s1 : Setting::s0);
    } else {
        throw ValidationError({"--candidates must be auto-s1, auto-s0 or file:PATH"});
    }

    if (args.pairs != "all") {
        if (args.pairs.rfind("file:", 0) != 0)
            throw ValidationError({"--pairs must be all or file:PATH"});
        const std::string path = args.pairs.substr(5);
        std::ifstream in(path);
        if (!in.good())
            throw ParseError("cannot open pair file '" + path + "'");
        p.universe = load_pair_file(in, loaded.token_ids);
    }
    return p;
}

SamplePlan resolve_plan(const OptimizeArgs &args, const ProblemInstance &p, int threads) {
    SamplePlan plan;
    if (!args.samples.empty()) {
        if (args.samples == "exhaustive")
            return SamplePlan::exhaustive();
        if (args.samples == "256xk")
            return SamplePlan::manual(sample_size_preset_256xk(p.budget));
        std::size_t q = 0;
        try {
            q = static_cast<std::size_t>(std::stoull(args.samples));
        } catch (const std::exception &) {
            throw ValidationError({"--samples must be an integer, 'exhaustive' or '256xk'"});
        }
        return SamplePlan::manual(q);
    }
    if (args.epsilon <= 0.0)
        throw ValidationError(
            {"the sampler needs a sample size: pass --samples N (or exhaustive/256xk), or "
             "--epsilon E for the bound-driven sizes (optionally with --opt-bound)"});

    plan.epsilon = args.epsilon;
    plan.confidence_l = args.confidence_l;
    if (args.opt_bound > 0.0) {
        // The opt-scaled size needs the ordered uncovered-pair count.
        const CoverageState state = group_coverage(p.graph, p.targets, p.universe, threads);
        plan.formula = SamplePlan::Formula::opt_bound;
        plan.opt_bound = args.opt_bound;
        plan.sample_count =
            sample_size_opt_bound(static_cast<double>(state.uncovered_ordered()), args.confidence_l,
                                  p.budget, p.candidates.size(), args.epsilon, args.opt_bound);
    } else {
        plan.formula = SamplePlan::Formula::budget_only;
        plan.sample_count =
            sample_size_budget_only(args.confidence_l, p.budget, p.candidates.size(), args.epsilon);
    }
    return plan;
}

nlohmann::ordered_json metrics_block(const ProblemInstance &p, const SelectionReport &report,
                                     const OptimizeArgs &args, int threads) {
    const Graph &before = p.graph;
    const Graph after = p.graph.with_edges(report.selected_edges);
    const std::size_t sample_pairs = args.metric_samples >= 0
                                         ? static_cast<std::size_t>(args.metric_samples)
                                         : (before.node_count() <= 600 ? 0 : 20'000);

    const auto dist_before = avg_distance(before, sample_pairs, Rng(args.seed ^ 0x11), threads);
    const auto dist_after = avg_distance(after, sample_pairs, Rng(args.seed ^ 0x11), threads);
    const auto close_before = closeness(before, p.targets);
    const auto close_after = closeness(after, p.targets);
    const double infl_before =
        ic_influence(before, p.targets, args.ic_prob, args.ic_trials, Rng(args.seed ^ 0x22), threads);
    const double infl_after =
        ic_influence(after, p.targets, args.ic_prob, args.ic_trials, Rng(args.seed ^ 0x22), threads);

    nlohmann::ordered_json out;
    out["distance"] = {{"before", dist_before.mean},
                       {"after", dist_after.mean},
                       {"unreachable-pairs", dist_before.unreachable},
                       {"sampled-pairs", sample_pairs},
                       {"improvement-percent", improvement_percent(dist_before.mean, dist_after.mean,
                                                                   /*decrease_is_better=*/true)}};
    out["closeness"] = {{"before", close_before.value},
                        {"after", close_after.value},
                        {"unreachable-nodes", close_before.unreachable},
                        {"improvement-percent",
                         improvement_percent(close_before.value, close_after.value)}};
    out["influence"] = {{"before", infl_before},
                        {"after", infl_after},
                        {"edge-probability", args.ic_prob},
                        {"trials", args.ic_trials},
                        {"improvement-percent", improvement_percent(infl_before, infl_after)}};
    return out;
}

int run_optimize(const OptimizeArgs &args) {
    const auto t0 = std::chrono::steady_clock::now();
    const int threads = resolve_threads(args.threads);

    const LoadResult loaded = load_graph_file(args.graph_path, args.directed);
    const auto targets = resolve_targets(args, loaded);
    ProblemInstance p = assemble_instance(args, loaded, targets);
    validate_or_throw(p);

    SelectionReport report;
    std::optional<SamplePlan> plan;
    const auto t_solve = std::chrono::steady_clock::now();
    if (args.algo == "ges") {
        report = run_ges(p, {.stop_on_zero_gain = args.stop_on_zero_gain, .threads = threads});
        report.seed = args.seed;
    } else if (args.algo == "bus") {
        plan = resolve_plan(args, p, threads);
        BusOptions opts;
        opts.threads = threads;
        report = run_bus(p, *plan, args.seed, opts);
    } else if (args.algo == "high-acc") {
        report = high_acc(p, args.acc_samples, args.seed, threads);
    } else if (args.algo == "high-degree") {
        report = high_degree(p, args.seed, threads);
    } else if (args.algo == "random") {
        report = random_edges(p, args.seed, threads);
    } else {
        throw ValidationError({"unknown algorithm '" + args.algo + "'"});
    }
    report.timings_ms["solve"] = 1000.0 * seconds_since(t_solve);

    nlohmann::ordered_json doc = report_to_json(report, p, plan ? &*plan : nullptr, args.timings);
    if (args.with_metrics)
        doc["metrics"] = metrics_block(p, report, args, threads);
    if (p.assume_unique_edge_coverage) {
        // The greedy guarantees rest on unique-edge coverage; certify it
        // exhaustively when the instance is small enough.
        std::string status = "assumed (instance too large to certify)";
        if (p.graph.node_count() <= 32 && p.candidates.size() <= 12)
            status = oracle::certify_instance(p) ? "certified" : "refuted";
        doc["guarantees"] = {{"unique-edge-coverage", status}};
    }

    std::ofstream out(args.out);
    if (!out.good())
        throw ParseError("cannot write report to '" + args.out + "'");
    out << doc.dump(2) << "\n";
    out.close();

    std::cout << args.algo << " k=" << p.budget << " coverage " << report.coverage_before.covered
              << " -> " << report.coverage_after.covered << " (gain " << report.exact_gain() << ") in "
              << seconds_since(t0) << "s; report: " << args.out << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 7;
    std::size_t instances = 0;
    std::size_t trials = 0;
    std::size_t graphs = 0;
    std::size_t resamples = 0;
    std::size_t seeds = 0;
    std::uint64_t tries = 100'000;
    std::string setting = "s1";
    bool certified = false;
    int threads = 0;
    std::size_t nodes = 2000;
    std::size_t samples = 0;
    int k = 10;
};

int run_verify(const VerifyArgs &args) {
    const int threads = resolve_threads(args.threads);
    std::vector<verify::CheckResult> results;

    auto pick = [&](const std::string &name) { return args.suite == name || args.suite == "all"; };

    if (pick("approx-ratio"))
        results.push_back(verify::approx_ratio(args.instances ? args.instances : 100, args.seed, threads));
    if (pick("submodularity"))
        results.push_back(verify::monotone_submodular(args.trials ? args.trials : 200, args.seed));
    if (pick("witness")) {
        const auto setting = parse_setting(args.setting);
        if (!setting)
            throw ValidationError({"unknown setting '" + args.setting + "'"});
        results.push_back(verify::witness_search(*setting, args.certified, args.tries, args.seed));
    }
    if (pick("estimator"))
        results.push_back(
            verify::estimator_unbiasedness(args.resamples ? args.resamples : 10'000, args.seed));
    if (pick("concentration"))
        results.push_back(verify::estimator_concentration(args.trials ? args.trials : 1000, args.seed));
    if (pick("equivalence"))
        results.push_back(verify::exhaustive_equivalence(args.instances ? args.instances : 50, args.seed));
    if (pick("oracle-equivalence"))
        results.push_back(verify::oracle_equivalence(args.graphs ? args.graphs : 100, args.seed));
    if (pick("dominance"))
        results.push_back(verify::baseline_dominance(args.seeds ? args.seeds : 50, args.seed, threads,
                                                     static_cast<NodeId>(args.nodes),
                                                     args.samples ? args.samples : 1000, args.k));
    if (pick("scaling"))
        results.push_back(verify::budget_scaling(args.seed, threads, static_cast<NodeId>(args.nodes),
                                                 args.samples ? args.samples : 500));
    if (pick("side-metrics"))
        results.push_back(verify::side_metrics(args.instances ? args.instances : 20, args.seed));

    if (results.empty())
        throw ValidationError({"unknown suite '" + args.suite +
                               "'; expected approx-ratio, submodularity, witness, estimator, "
                               "concentration, equivalence, oracle-equivalence, dominance, scaling, "
                               "side-metrics or all"});

    bool all_pass = true;
    for (const auto &result : results) {
        verify::print(result);
        if (result.stats.contains("witness-instance"))
            std::cout << result.stats["witness-instance"].get<std::string>();
        all_pass &= result.pass;
    }
    return all_pass ? 0 : 1;
}

struct ExperimentArgs {
    std::string generator; // ba:N,M or er:N,P
    std::string graph_path;
    bool directed = false;
    std::string algos = "bus,high-acc,high-degree,random";
    std::string k_sweep;
    int k = 10;
    std::string samples_sweep;
    std::size_t samples = 1000;
    std::size_t acc_samples = 0; // 0: same as samples
    int reps = 10;
    std::size_t target_count = 5;
    std::uint64_t seed = 1;
    int threads = 0;
    bool timings = false;
    std::string out = "centrex-experiment.csv";
};

Graph experiment_graph(const ExperimentArgs &args, Rng &rng) {
    if (!args.graph_path.empty())
        return load_graph_file(args.graph_path, args.directed).graph;
    if (args.generator.rfind("ba:", 0) == 0) {
        const auto parts = split_list(args.generator.substr(3));
        if (parts.size() != 2)
            throw ValidationError({"--generator ba:N,M"});
        return barabasi_albert(static_cast<NodeId>(std::stoul(parts[0])),
                               static_cast<NodeId>(std::stoul(parts[1])), rng);
    }
    if (args.generator.rfind("er:", 0) == 0) {
        const auto parts = split_list(args.generator.substr(3));
        if (parts.size() != 2)
            throw ValidationError({"--generator er:N,P"});
        return gnp(static_cast<NodeId>(std::stoul(parts[0])), std::stod(parts[1]), args.directed, rng);
    }
    throw ValidationError({"experiment needs --graph or --generator ba:N,M / er:N,P"});
}

int run_experiment(const ExperimentArgs &args) {
    const int threads = resolve_threads(args.threads);
    const auto algos = split_list(args.algos);
    if (algos.empty())
        throw ValidationError({"--algos is empty"});

    std::vector<int> k_values;
    if (!args.k_sweep.empty())
        for (const std::string &item : split_list(args.k_sweep))
            k_values.push_back(std::stoi(item));
    else
        k_values.push_back(args.k);

    std::vector<std::size_t> sample_values;
    if (!args.samples_sweep.empty())
        for (const std::string &item : split_list(args.samples_sweep))
            sample_values.push_back(std::stoull(item));
    else
        sample_values.push_back(args.samples);

    std::ofstream out(args.out);
    if (!out.good())
        throw ParseError("cannot write CSV to '" + args.out + "'");
    out << "algorithm,k,samples,rep,seed,universe,coverage_before,coverage_after,gain";
    if (args.timings)
        out << ",time_ms";
    out << "\n";

    std::uint64_t config_index = 0;
    for (const int k : k_values) {
        for (const std::size_t samples : sample_values) {
            for (int rep = 0; rep < args.reps; ++rep) {
                const std::uint64_t run_seed = Rng(args.seed).split(config_index).split(rep).next();
                Rng rng(run_seed);
                Graph g = experiment_graph(args, rng);

                ProblemInstance p;
                std::vector<NodeId> targets;
                while (targets.size() < args.target_count) {
                    const NodeId v = static_cast<NodeId>(rng.below(g.node_count()));
                    if (std::find(targets.begin(), targets.end(), v) == targets.end())
                        targets.push_back(v);
                }
                std::sort(targets.begin(), targets.end());
                p.graph = std::move(g);
                p.targets = targets;
                p.setting = args.directed ? Setting::s4_directed : Setting::s1;
                p.candidates = build_candidates(p.graph, p.targets, p.setting);
                p.budget = k;
                validate_or_throw(p);

                for (const std::string &algo : algos) {
                    const auto t0 = std::chrono::steady_clock::now();
                    SelectionReport report;
                    if (algo == "ges") {
                        report = run_ges(p, {.stop_on_zero_gain = false, .threads = threads});
                    } else if (algo == "bus") {
                        BusOptions opts;
                        opts.threads = threads;
                        report = run_bus(p, SamplePlan::manual(samples), run_seed, opts);
                    } else if (algo == "high-acc") {
                        report = high_acc(p, args.acc_samples ? args.acc_samples : samples, run_seed,
                                          threads);
                    } else if (algo == "high-degree") {
                        report = high_degree(p, run_seed, threads);
                    } else if (algo == "random") {
                        report = random_edges(p, run_seed, threads);
                    } else {
                        throw ValidationError({"unknown algorithm '" + algo + "'"});
                    }
                    out << algo << "," << k << "," << samples << "," << rep << "," << run_seed << ","
                        << report.coverage_before.universe << "," << report.coverage_before.covered
                        << "," << report.coverage_after.covered << "," << report.exact_gain();
                    if (args.timings)
                        out << "," << 1000.0 * seconds_since(t0);
                    out << "\n";
                }
            }
            ++config_index;
        }
    }
    out.close();
    std::cout << "experiment CSV: " << args.out << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"group coverage centrality optimization by edge addition"};
    app.require_subcommand(1);

    OptimizeArgs opt;
    CLI::App *optimize = app.add_subcommand("optimize", "select edges for a target set");
    optimize->add_option("--graph", opt.graph_path, "edge-list file")->required();
    optimize->add_option("--algo", opt.algo, "ges | bus | high-acc | high-degree | random")->required();
    optimize->add_option("--k", opt.k, "edge budget")->required();
    optimize->add_option("--target-nodes", opt.target_nodes, "comma-separated node tokens");
    optimize->add_option("--target-random", opt.target_random, "draw this many random targets");
    optimize->add_option("--candidates", opt.candidates, "auto-s1 | auto-s0 | file:PATH");
    optimize->add_option("--pairs", opt.pairs, "all | file:PATH");
    optimize->add_flag("--directed", opt.directed, "treat the graph as directed");
    optimize->add_option("--seed", opt.seed, "root seed for every random choice");
    optimize->add_option("--threads", opt.threads, "worker cap (default: CENTREX_THREADS or hardware)");
    optimize->add_option("--epsilon", opt.epsilon, "sampling accuracy target in (0,1)");
    optimize->add_option("--confidence-l", opt.confidence_l, "confidence exponent l");
    optimize->add_option("--opt-bound", opt.opt_bound, "lower bound on the optimal gain (ordered pairs)");
    optimize->add_option("--samples", opt.samples, "sample count: integer, exhaustive or 256xk");
    optimize->add_option("--acc-samples", opt.acc_samples, "sample count for high-acc");
    optimize->add_flag("--stop-on-zero-gain", opt.stop_on_zero_gain, "stop ges early at zero gain");
    optimize->add_flag("--assume-unique-coverage", opt.assume_unique_coverage,
                       "record that each pair is coverable by one added edge only");
    optimize->add_flag("--metrics", opt.with_metrics, "add distance/closeness/influence to the report");
    optimize->add_option("--metric-samples", opt.metric_samples,
                         "pair samples for the distance metric (0 = exhaustive)");
    optimize->add_option("--ic-prob", opt.ic_prob, "cascade edge probability");
    optimize->add_option("--ic-trials", opt.ic_trials, "cascade trials");
    optimize->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
    optimize->add_option("--out", opt.out, "report path");

    VerifyArgs ver;
    CLI::App *verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", ver.suite, "suite name or all")->required();
    verify_cmd->add_option("--seed", ver.seed, "suite seed");
    verify_cmd->add_option("--instances", ver.instances, "instance count");
    verify_cmd->add_option("--trials", ver.trials, "trial count");
    verify_cmd->add_option("--graphs", ver.graphs, "graph count");
    verify_cmd->add_option("--resamples", ver.resamples, "resample count");
    verify_cmd->add_option("--seeds", ver.seeds, "seed count for dominance");
    verify_cmd->add_option("--tries", ver.tries, "witness search tries");
    verify_cmd->add_option("--setting", ver.setting, "witness setting (s1, s4-directed)");
    verify_cmd->add_flag("--certified", ver.certified, "restrict witness search to certified instances");
    verify_cmd->add_option("--threads", ver.threads, "worker cap");
    verify_cmd->add_option("--nodes", ver.nodes, "graph size for dominance/scaling");
    verify_cmd->add_option("--samples", ver.samples, "sample count for dominance/scaling");
    verify_cmd->add_option("--k", ver.k, "budget for dominance");

    ExperimentArgs exp;
    CLI::App *experiment = app.add_subcommand("experiment", "sweep configurations into a CSV");
    experiment->add_option("--generator", exp.generator, "ba:N,M or er:N,P");
    experiment->add_option("--graph", exp.graph_path, "edge-list file instead of a generator");
    experiment->add_flag("--directed", exp.directed, "treat the graph as directed");
    experiment->add_option("--algos", exp.algos, "comma list of algorithms");
    experiment->add_option("--k-sweep", exp.k_sweep, "comma list of budgets");
    experiment->add_option("--k", exp.k, "fixed budget");
    experiment->add_option("--samples-sweep", exp.samples_sweep, "comma list of sample counts");
    experiment->add_option("--samples", exp.samples, "fixed sample count");
    experiment->add_option("--acc-samples", exp.acc_samples, "high-acc sample count (default: samples)");
    experiment->add_option("--reps", exp.reps, "repetitions per configuration");
    experiment->add_option("--targets", exp.target_count, "random target set size");
    experiment->add_option("--seed", exp.seed, "root seed");
    experiment->add_option("--threads", exp.threads, "worker cap");
    experiment->add_flag("--timings", exp.timings, "append a time_ms column");
    experiment->add_option("--out", exp.out, "CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (optimize->parsed())
            return run_optimize(opt);
        if (verify_cmd->parsed())
            return run_verify(ver);
        if (experiment->parsed())
            return run_experiment(exp);
    } catch (const GuardError &e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ValidationError &e) {
        std::cerr << "invalid input:\n";
        for (const auto &issue : e.issues())
            std::cerr << "  - " << issue << "\n";
        return kExitValidation;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}

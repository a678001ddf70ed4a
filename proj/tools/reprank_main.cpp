// Command-line front end: rank (score a graph), eval (cross-validated
// accuracy), hist (score histogram) and topk (induced subgraph extraction).
//
// Exit codes: 0 success, 2 solver hit the iteration cap (scores are still
// written, flagged in the header), anything else is an error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reprank/evaluation.hpp"
#include "reprank/histogram.hpp"
#include "reprank/score_io.hpp"

namespace {

using namespace reprank;

constexpr int kExitNotConverged = 2;

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

Algorithm algorithm_from(const std::string& name)
{
    const auto algo = parse_algorithm(name);
    if (!algo) throw std::runtime_error("unknown algorithm: " + name);
    return *algo;
}

SeedEncoding encoding_for(Algorithm a)
{
    switch (a) {
    case Algorithm::trustrank: return SeedEncoding::good_only;
    case Algorithm::antitrustrank: return SeedEncoding::spam_only;
    default: return SeedEncoding::signed_both;
    }
}

std::string format_number(double v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

struct RankArgs {
    std::string edges;
    std::string labels;
    std::string algo = "reprank";
    double alpha1 = 0.85;
    double alpha2 = 0.85;
    double alpha3 = 0.15;
    double alpha = 0.85;
    bool alpha_set = false;
    double tol = 1e-10;
    int max_iters = 1000;
    bool normalize_seeds = false;
    std::string out;
};

int run_rank(const RankArgs& args)
{
    const Algorithm algo = algorithm_from(args.algo);

    SolverConfig cfg;
    cfg.alpha1 = args.alpha1;
    cfg.alpha2 = args.alpha2;
    cfg.alpha3 = args.alpha3;
    if (args.alpha_set) {
        // One knob for all three algorithms: the damping coefficient of the
        // walks, or the coupled (a, a, 1 - a) setting of the combined solver.
        cfg.alpha1 = args.alpha;
        cfg.alpha2 = args.alpha;
        if (algo == Algorithm::reprank) cfg.alpha3 = 1.0 - args.alpha;
    }
    cfg.tolerance = args.tol;
    cfg.max_iterations = args.max_iters;
    cfg.validate();

    const Graph graph = Graph::load_edge_list_file(args.edges);
    LabelSet labels;
    if (!args.labels.empty()) labels = load_labels_file(args.labels, graph);
    const SeedVector seeds = make_seed_vector(labels, graph.node_count(), encoding_for(algo),
                                              args.normalize_seeds);

    SolveResult res;
    switch (algo) {
    case Algorithm::reprank: {
        const auto forward = TransitionMatrix::build(graph, Direction::forward);
        const auto backward = TransitionMatrix::build(graph, Direction::backward);
        res = reprank_solve(forward, backward, seeds, cfg);
        break;
    }
    case Algorithm::trustrank: {
        const auto forward = TransitionMatrix::build(graph, Direction::forward);
        res = trustrank_solve(forward, seeds, cfg.alpha1, cfg.tolerance, cfg.max_iterations);
        break;
    }
    case Algorithm::antitrustrank: {
        const auto backward = TransitionMatrix::build(graph, Direction::backward);
        res = antitrustrank_solve(backward, seeds, cfg.alpha1, cfg.tolerance,
                                  cfg.max_iterations);
        break;
    }
    }

    std::vector<std::string> header;
    header.push_back("algo: " + std::string(algorithm_name(algo)));
    if (algo == Algorithm::reprank) {
        header.push_back("alpha1: " + format_number(cfg.alpha1));
        header.push_back("alpha2: " + format_number(cfg.alpha2));
        header.push_back("alpha3: " + format_number(cfg.alpha3));
    } else {
        header.push_back("alpha: " + format_number(cfg.alpha1));
    }
    header.push_back("tol: " + format_number(cfg.tolerance));
    header.push_back("iterations: " + std::to_string(res.iterations));
    header.push_back(std::string("converged: ") + (res.converged ? "yes" : "no"));
    if (!res.converged)
        header.push_back("WARNING: iteration cap " + std::to_string(cfg.max_iterations) +
                         " hit before the tolerance was reached");

    auto out = open_output(args.out);
    write_scores(out, graph, res.scores, header);
    if (!out) throw std::runtime_error("write failed: " + args.out);

    if (!res.converged) {
        std::cerr << "reprank: solver did not converge within "
                  << cfg.max_iterations << " iterations\n";
        return kExitNotConverged;
    }
    return 0;
}

struct EvalArgs {
    std::string edges;
    std::string labels;
    std::string algo = "reprank";
    int splits = 10;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    int max_iters = 1000;
    bool normalize_seeds = false;
    std::string out;
};

int run_eval(const EvalArgs& args)
{
    const Algorithm algo = algorithm_from(args.algo);
    const Graph graph = Graph::load_edge_list_file(args.edges);
    const LabelSet labels = load_labels_file(args.labels, graph);

    EvalOptions options;
    options.n_splits = args.splits;
    options.rng_seed = args.seed;
    options.tolerance = args.tol;
    options.max_iterations = args.max_iters;
    options.normalize_seeds = args.normalize_seeds;

    const auto report =
        cross_validate(algo, graph, labels, default_grid(algo), options);
    auto out = open_output(args.out);
    out << report_to_json(report);
    if (!out) throw std::runtime_error("write failed: " + args.out);
    return 0;
}

struct HistArgs {
    std::string scores;
    int bins = 50;
    std::string out;
};

int run_hist(const HistArgs& args)
{
    const auto rows = read_scores_file(args.scores);
    std::vector<double> values;
    values.reserve(rows.size());
    for (const ScoreRow& row : rows) values.push_back(row.score);

    const auto histogram = make_histogram(values, args.bins);
    auto out = open_output(args.out);
    write_histogram(out, histogram);
    if (!out) throw std::runtime_error("write failed: " + args.out);
    return 0;
}

struct TopkArgs {
    std::string edges;
    std::uint32_t k = 1;
    std::string by = "indegree";
    std::string scores;
    std::string out;
};

int run_topk(const TopkArgs& args)
{
    const Graph graph = Graph::load_edge_list_file(args.edges);

    SubgraphSelection sel;
    if (args.by == "score") {
        if (args.scores.empty())
            throw std::runtime_error("--scores is required with --by score");
        const auto dense = scores_for_graph(graph, read_scores_file(args.scores));
        sel = top_k_by_score(graph, dense, args.k);
    } else {
        sel = top_k_by_indegree(graph, args.k);
    }

    auto out = open_output(args.out);
    for (const Edge& e : sel.edges)
        out << graph.external_id(e.first) << '\t' << graph.external_id(e.second) << '\n';
    if (!out) throw std::runtime_error("write failed: " + args.out);

    // Companion manifest: the selected nodes in rank order, flagging the ones
    // the induced subgraph leaves isolated.
    const std::set<NodeId> omitted(sel.omitted.begin(), sel.omitted.end());
    auto nodes_out = open_output(args.out + ".nodes");
    for (NodeId v : sel.nodes)
        nodes_out << graph.external_id(v) << '\t'
                  << (omitted.count(v) ? "omitted" : "connected") << '\n';
    if (!nodes_out) throw std::runtime_error("write failed: " + args.out + ".nodes");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reputation propagation over directed graphs"};
    app.require_subcommand(1);

    const auto algo_check = CLI::IsMember({"reprank", "trustrank", "antitrustrank"});

    RankArgs rank;
    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "Solve for node scores and write them sorted, best first");
    rank_cmd->add_option("--edges", rank.edges, "Edge list file (src<TAB>dst)")
        ->required()
        ->check(CLI::ExistingFile);
    rank_cmd->add_option("--labels", rank.labels, "Labeled seed nodes (node_id<TAB>good|spam)")
        ->check(CLI::ExistingFile);
    rank_cmd->add_option("--algo", rank.algo, "Scoring algorithm")
        ->check(algo_check)
        ->capture_default_str();
    auto* a1 = rank_cmd->add_option("--alpha1", rank.alpha1, "Forward trust weight")
                   ->capture_default_str();
    auto* a2 = rank_cmd->add_option("--alpha2", rank.alpha2, "Backward mistrust weight")
                   ->capture_default_str();
    auto* a3 = rank_cmd->add_option("--alpha3", rank.alpha3, "Seed injection weight")
                   ->capture_default_str();
    rank_cmd
        ->add_option("--alpha", rank.alpha,
                     "Single damping knob: walk coefficient, or the coupled "
                     "(a, a, 1-a) reputation setting")
        ->excludes(a1)
        ->excludes(a2)
        ->excludes(a3);
    rank_cmd->add_option("--tol", rank.tol, "L1 convergence tolerance")
        ->capture_default_str();
    rank_cmd->add_option("--max-iters", rank.max_iters, "Iteration cap")
        ->capture_default_str();
    rank_cmd->add_flag("--normalize-seeds", rank.normalize_seeds,
                       "Scale seeds to unit L1 mass");
    rank_cmd->add_option("--out", rank.out, "Output scores file")->required();

    EvalArgs eval;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Cross-validated spam classification accuracy with grid search");
    eval_cmd->add_option("--edges", eval.edges, "Edge list file (src<TAB>dst)")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--labels", eval.labels, "Labeled nodes (node_id<TAB>good|spam)")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--algo", eval.algo, "Scoring algorithm")
        ->check(algo_check)
        ->capture_default_str();
    eval_cmd->add_option("--splits", eval.splits, "Number of random half/half splits")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    eval_cmd->add_option("--seed", eval.seed, "RNG seed for the splits")
        ->capture_default_str();
    eval_cmd->add_option("--tol", eval.tol, "L1 convergence tolerance")
        ->capture_default_str();
    eval_cmd->add_option("--max-iters", eval.max_iters, "Iteration cap per solve")
        ->capture_default_str();
    eval_cmd->add_flag("--normalize-seeds", eval.normalize_seeds,
                       "Scale seeds to unit L1 mass");
    eval_cmd->add_option("--out", eval.out, "Output JSON report")->required();

    HistArgs hist;
    CLI::App* hist_cmd = app.add_subcommand(
        "hist", "Equal-width histogram of a scores file, plot-ready");
    hist_cmd->add_option("--scores", hist.scores, "Scores file from the rank command")
        ->required()
        ->check(CLI::ExistingFile);
    hist_cmd->add_option("--bins", hist.bins, "Number of bins")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    hist_cmd->add_option("--out", hist.out, "Output histogram file")->required();

    TopkArgs topk;
    CLI::App* topk_cmd = app.add_subcommand(
        "topk", "Induced subgraph on the k best nodes, for figure rendering");
    topk_cmd->add_option("--edges", topk.edges, "Edge list file (src<TAB>dst)")
        ->required()
        ->check(CLI::ExistingFile);
    topk_cmd->add_option("--k", topk.k, "Number of nodes to keep")
        ->required()
        ->check(CLI::Range(1u, 4294967295u));
    topk_cmd->add_option("--by", topk.by, "Selection criterion")
        ->check(CLI::IsMember({"indegree", "score"}))
        ->capture_default_str();
    topk_cmd->add_option("--scores", topk.scores, "Scores file (required with --by score)")
        ->check(CLI::ExistingFile);
    topk_cmd->add_option("--out", topk.out,
                         "Output edge list; node manifest goes to <out>.nodes")
        ->required();

    CLI11_PARSE(app, argc, argv);
    rank.alpha_set = rank_cmd->count("--alpha") > 0;

    try {
        if (rank_cmd->parsed()) return run_rank(rank);
        if (eval_cmd->parsed()) return run_eval(eval);
        if (hist_cmd->parsed()) return run_hist(hist);
        return run_topk(topk);
    } catch (const std::exception& e) {
        std::cerr << "reprank: error: " << e.what() << '\n';
        return 1;
    }
}

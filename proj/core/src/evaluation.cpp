#include "reprank/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace reprank {

const char* algorithm_name(Algorithm a)
{
    switch (a) {
    case Algorithm::reprank: return "reprank";
    case Algorithm::trustrank: return "trustrank";
    case Algorithm::antitrustrank: return "antitrustrank";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text)
{
    if (text == "reprank") return Algorithm::reprank;
    if (text == "trustrank") return Algorithm::trustrank;
    if (text == "antitrustrank") return Algorithm::antitrustrank;
    return std::nullopt;
}

Polarity score_polarity(Algorithm a)
{
    return a == Algorithm::antitrustrank ? Polarity::higher_is_bad : Polarity::higher_is_good;
}

double ConfusionCounts::accuracy() const
{
    const std::uint64_t n = total();
    return n == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(n);
}

std::vector<ParamPoint> default_grid(Algorithm a)
{
    static constexpr double kDamping[] = {0.5, 0.7, 0.85, 0.95};
    std::vector<ParamPoint> grid;
    if (a != Algorithm::reprank) {
        for (double alpha : kDamping) grid.push_back({alpha, alpha, 1.0 - alpha});
        return grid;
    }
    for (double a1 : kDamping) {
        for (double a2 : kDamping) {
            const double coupled = 1.0 - std::max(a1, a2);
            for (double a3 : kDamping) grid.push_back({a1, a2, a3});
            if (std::none_of(std::begin(kDamping), std::end(kDamping),
                             [coupled](double v) { return v == coupled; }))
                grid.push_back({a1, a2, coupled});
        }
    }
    return grid;
}

namespace {

// Explicit Fisher-Yates so the partition is reproducible across standard
// library implementations (std::shuffle is not).
void deterministic_shuffle(std::vector<NodeId>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

SeedEncoding encoding_for(Algorithm a)
{
    switch (a) {
    case Algorithm::trustrank: return SeedEncoding::good_only;
    case Algorithm::antitrustrank: return SeedEncoding::spam_only;
    default: return SeedEncoding::signed_both;
    }
}

ConfusionCounts count_confusion(std::span<const Label> truth, std::span<const Label> predicted)
{
    ConfusionCounts c;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == Label::spam)
            (predicted[i] == Label::spam ? c.tp : c.fn) += 1;
        else
            (predicted[i] == Label::spam ? c.fp : c.tn) += 1;
    }
    return c;
}

// Candidate thresholds per the tuning rule: midpoints between consecutive
// distinct train scores, plus 0 for the signed reputation scores.
std::vector<double> threshold_sweep(std::vector<double> train_scores, Algorithm a)
{
    std::sort(train_scores.begin(), train_scores.end());
    train_scores.erase(std::unique(train_scores.begin(), train_scores.end()),
                       train_scores.end());
    std::vector<double> sweep;
    for (std::size_t i = 1; i < train_scores.size(); ++i)
        sweep.push_back(0.5 * (train_scores[i - 1] + train_scores[i]));
    if (a == Algorithm::reprank) sweep.push_back(0.0);
    std::sort(sweep.begin(), sweep.end());
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
    if (sweep.empty()) sweep.push_back(0.0);
    return sweep;
}

ScoreVector solve_grid_point(Algorithm a, const TransitionMatrix& forward,
                             const TransitionMatrix& backward, const LabelSet& train,
                             const ParamPoint& p, const EvalOptions& options,
                             const LabelSet* must_stay_unseeded, std::uint64_t* solver_calls,
                             bool& converged)
{
    const SeedVector d = make_seed_vector(train, forward.dimension(), encoding_for(a),
                                          options.normalize_seeds);
    if (must_stay_unseeded) {
        for (const auto& [node, label] : must_stay_unseeded->entries())
            if (d[node] != 0.0)
                throw std::logic_error("evaluation: seed mass on a held-out node");
    }
    if (solver_calls) ++*solver_calls;

    SolveResult res;
    switch (a) {
    case Algorithm::reprank:
        res = reprank_solve(forward, backward, d,
                            {p.alpha1, p.alpha2, p.alpha3, options.tolerance,
                             options.max_iterations});
        break;
    case Algorithm::trustrank:
        res = trustrank_solve(forward, d, p.alpha1, options.tolerance, options.max_iterations);
        break;
    case Algorithm::antitrustrank:
        res = antitrustrank_solve(backward, d, p.alpha1, options.tolerance,
                                  options.max_iterations);
        break;
    }
    converged = res.converged;
    return std::move(res.scores);
}

}  // namespace

std::pair<LabelSet, LabelSet> split_labels(const LabelSet& labels, std::uint64_t rng_seed)
{
    if (labels.size() < 2)
        throw std::invalid_argument("split_labels: at least two labeled nodes required");
    if (labels.count(Label::good) == 0 || labels.count(Label::spam) == 0)
        throw std::invalid_argument("split_labels: both classes must be present");

    std::vector<NodeId> good_ids, spam_ids;
    for (const auto& [node, label] : labels.entries())
        (label == Label::good ? good_ids : spam_ids).push_back(node);

    std::mt19937_64 rng(rng_seed);
    deterministic_shuffle(good_ids, rng);
    deterministic_shuffle(spam_ids, rng);

    // Train takes ceil(m/2) nodes total and ceil(g/2) of the good ones; the
    // spam quota follows, landing within one of s/2.
    const std::size_t train_good = (good_ids.size() + 1) / 2;
    const std::size_t train_spam = (labels.size() + 1) / 2 - train_good;

    std::pair<LabelSet, LabelSet> halves;
    for (std::size_t i = 0; i < good_ids.size(); ++i)
        (i < train_good ? halves.first : halves.second).add(good_ids[i], Label::good);
    for (std::size_t i = 0; i < spam_ids.size(); ++i)
        (i < train_spam ? halves.first : halves.second).add(spam_ids[i], Label::spam);
    return halves;
}

std::vector<Label> classify(std::span<const double> scores, std::span<const NodeId> nodes,
                            double threshold, Polarity polarity)
{
    std::vector<Label> predicted;
    predicted.reserve(nodes.size());
    for (NodeId node : nodes) {
        const double s = scores[node];
        // A score equal to the threshold predicts spam under either polarity.
        const bool spam = polarity == Polarity::higher_is_good ? !(s > threshold)
                                                               : s >= threshold;
        predicted.push_back(spam ? Label::spam : Label::good);
    }
    return predicted;
}

GridSearchResult grid_search(Algorithm algorithm, const TransitionMatrix& forward,
                             const TransitionMatrix& backward, const LabelSet& train,
                             std::span<const ParamPoint> grid, const EvalOptions& options,
                             const LabelSet* must_stay_unseeded, std::uint64_t* solver_calls)
{
    if (grid.empty()) throw std::invalid_argument("grid_search: empty parameter grid");
    if (train.size() == 0) throw std::invalid_argument("grid_search: empty train set");

    std::vector<NodeId> nodes;
    std::vector<Label> truth;
    for (const auto& [node, label] : train.entries()) {
        nodes.push_back(node);
        truth.push_back(label);
    }

    const Polarity polarity = score_polarity(algorithm);
    GridSearchResult best;
    bool found = false;

    for (const ParamPoint& point : grid) {
        bool converged = false;
        ScoreVector scores = solve_grid_point(algorithm, forward, backward, train, point,
                                              options, must_stay_unseeded, solver_calls,
                                              converged);
        if (!converged) {
            ++best.skipped_points;
            continue;
        }

        std::vector<double> train_scores;
        train_scores.reserve(nodes.size());
        for (NodeId node : nodes) train_scores.push_back(scores[node]);

        // Ascending sweep + strict improvement keeps the earliest grid point
        // and the lowest threshold on accuracy ties.
        for (double threshold : threshold_sweep(train_scores, algorithm)) {
            const auto predicted = classify(scores, nodes, threshold, polarity);
            const double accuracy = count_confusion(truth, predicted).accuracy();
            if (!found || accuracy > best.train_accuracy) {
                found = true;
                best.params = point;
                best.threshold = threshold;
                best.train_accuracy = accuracy;
                best.scores = scores;
            }
        }
    }
    if (!found)
        throw std::runtime_error("grid_search: no grid point converged");
    return best;
}

EvalReport cross_validate(Algorithm algorithm, const Graph& graph, const LabelSet& labels,
                          std::span<const ParamPoint> grid, const EvalOptions& options)
{
    if (options.n_splits < 1)
        throw std::invalid_argument("cross_validate: n_splits must be at least 1");

    const auto forward = TransitionMatrix::build(graph, Direction::forward);
    const auto backward = TransitionMatrix::build(graph, Direction::backward);

    EvalReport report;
    report.algorithm = algorithm_name(algorithm);
    report.n_splits = options.n_splits;
    report.rng_seed = options.rng_seed;
    report.tolerance = options.tolerance;
    report.max_iterations = options.max_iterations;
    report.normalize_seeds = options.normalize_seeds;

    std::mt19937_64 seed_stream(options.rng_seed);
    double accuracy_sum = 0.0;

    for (int s = 0; s < options.n_splits; ++s) {
        const std::uint64_t split_seed = seed_stream();
        const auto [train, test] = split_labels(labels, split_seed);

        const GridSearchResult tuned =
            grid_search(algorithm, forward, backward, train, grid, options, &test,
                        &report.solver_calls);

        std::vector<NodeId> nodes;
        std::vector<Label> truth;
        for (const auto& [node, label] : test.entries()) {
            nodes.push_back(node);
            truth.push_back(label);
        }
        const auto predicted =
            classify(tuned.scores, nodes, tuned.threshold, score_polarity(algorithm));
        const ConfusionCounts confusion = count_confusion(truth, predicted);

        SplitReport split;
        split.split_index = s;
        split.split_seed = split_seed;
        split.params = tuned.params;
        split.threshold = tuned.threshold;
        split.train_accuracy = tuned.train_accuracy;
        split.accuracy = confusion.accuracy();
        split.confusion = confusion;
        report.splits.push_back(split);

        report.total_confusion.tp += confusion.tp;
        report.total_confusion.tn += confusion.tn;
        report.total_confusion.fp += confusion.fp;
        report.total_confusion.fn += confusion.fn;
        accuracy_sum += split.accuracy;
    }
    report.mean_accuracy = accuracy_sum / static_cast<double>(options.n_splits);
    return report;
}

std::string report_to_json(const EvalReport& report)
{
    using nlohmann::json;
    const bool single_alpha = report.algorithm != "reprank";

    auto confusion_json = [](const ConfusionCounts& c) {
        return json{{"tp", c.tp}, {"tn", c.tn}, {"fp", c.fp}, {"fn", c.fn}};
    };
    auto params_json = [single_alpha](const ParamPoint& p) {
        if (single_alpha) return json{{"alpha", p.alpha1}};
        return json{{"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"alpha3", p.alpha3}};
    };

    json splits = json::array();
    for (const SplitReport& s : report.splits) {
        splits.push_back({{"split_index", s.split_index},
                          {"split_seed", s.split_seed},
                          {"params", params_json(s.params)},
                          {"threshold", s.threshold},
                          {"train_accuracy", s.train_accuracy},
                          {"accuracy", s.accuracy},
                          {"confusion", confusion_json(s.confusion)}});
    }

    const json j{{"algorithm", report.algorithm},
                 {"n_splits", report.n_splits},
                 {"rng_seed", report.rng_seed},
                 {"tolerance", report.tolerance},
                 {"max_iterations", report.max_iterations},
                 {"normalize_seeds", report.normalize_seeds},
                 {"mean_accuracy", report.mean_accuracy},
                 {"confusion", confusion_json(report.total_confusion)},
                 {"solver_calls", report.solver_calls},
                 {"splits", splits}};
    return j.dump(2) + "\n";
}

}  // namespace reprank

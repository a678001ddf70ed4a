#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reprank/labels.hpp"
#include "reprank/solver.hpp"

namespace reprank {

enum class Algorithm { reprank, trustrank, antitrustrank };

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);

/// How scores order the classes: trust propagation puts good nodes high,
/// mistrust propagation puts spam nodes high.
enum class Polarity { higher_is_good, higher_is_bad };
Polarity score_polarity(Algorithm a);

/// One grid-search candidate. TrustRank and anti-TrustRank read alpha1 as
/// their single damping coefficient and ignore the other two.
struct ParamPoint {
    double alpha1 = 0.85;
    double alpha2 = 0.85;
    double alpha3 = 0.15;
};

/// Damping values {0.5, 0.7, 0.85, 0.95} per coefficient; the reputation grid
/// additionally includes the coupled setting alpha3 = 1 - max(alpha1, alpha2).
std::vector<ParamPoint> default_grid(Algorithm a);

struct EvalOptions {
    int n_splits = 10;
    std::uint64_t rng_seed = 0;
    double tolerance = 1e-10;
    int max_iterations = 1000;
    bool normalize_seeds = false;
};

/// Random half/half partition of the labeled nodes, stratified so each half
/// keeps the good/spam ratio within one element. The first half has
/// ceil(m/2) entries. Deterministic for a fixed rng_seed. Throws if either
/// class is absent or fewer than two labels exist.
std::pair<LabelSet, LabelSet> split_labels(const LabelSet& labels, std::uint64_t rng_seed);

/// Thresholds the given nodes' scores into predicted labels. A score equal to
/// the threshold predicts spam, under either polarity.
std::vector<Label> classify(std::span<const double> scores, std::span<const NodeId> nodes,
                            double threshold, Polarity polarity);

struct ConfusionCounts {
    std::uint64_t tp = 0;  // spam predicted spam
    std::uint64_t tn = 0;  // good predicted good
    std::uint64_t fp = 0;  // good predicted spam
    std::uint64_t fn = 0;  // spam predicted good

    std::uint64_t total() const { return tp + tn + fp + fn; }
    double accuracy() const;
};

struct GridSearchResult {
    ParamPoint params;
    double threshold = 0.0;
    double train_accuracy = 0.0;
    ScoreVector scores;      // whole-graph scores at the winning point
    int skipped_points = 0;  // grid points whose solve did not converge
};

/// Tries every grid point: solves with seeds drawn from `train` only, sweeps
/// the threshold over midpoints of consecutive distinct train scores (plus 0
/// for the reputation algorithm) and keeps the (params, threshold) pair of
/// highest train accuracy. Ties resolve to the earlier grid point, then the
/// lower threshold. Non-convergent points are skipped; if every point is
/// skipped a std::runtime_error is raised.
///
/// When `must_stay_unseeded` is given, every solver call first audits that
/// the seed vector carries zero mass on those nodes (std::logic_error
/// otherwise); cross_validate passes the held-out half here. `solver_calls`,
/// when given, counts the audited solves.
GridSearchResult grid_search(Algorithm algorithm, const TransitionMatrix& forward,
                             const TransitionMatrix& backward, const LabelSet& train,
                             std::span<const ParamPoint> grid, const EvalOptions& options,
                             const LabelSet* must_stay_unseeded = nullptr,
                             std::uint64_t* solver_calls = nullptr);

struct SplitReport {
    int split_index = 0;
    std::uint64_t split_seed = 0;
    ParamPoint params;
    double threshold = 0.0;
    double train_accuracy = 0.0;
    double accuracy = 0.0;  // on the held-out half
    ConfusionCounts confusion;
};

struct EvalReport {
    std::string algorithm;
    int n_splits = 0;
    std::uint64_t rng_seed = 0;
    double tolerance = 0.0;
    int max_iterations = 0;
    bool normalize_seeds = false;
    std::vector<SplitReport> splits;
    double mean_accuracy = 0.0;
    ConfusionCounts total_confusion;     // summed over splits
    std::uint64_t solver_calls = 0;      // every one audited for seed leakage
};

/// Random-subsampling cross-validation: for each split, tune (params,
/// threshold) on the train half via grid_search, then measure accuracy of the
/// whole-graph scores on the held-out half. Seeds fed to any solver come from
/// the train half only, audited per call.
EvalReport cross_validate(Algorithm algorithm, const Graph& graph, const LabelSet& labels,
                          std::span<const ParamPoint> grid, const EvalOptions& options);

/// Stable JSON rendering of a report (sorted keys, shortest round-trip
/// numbers, trailing newline): identical inputs give identical bytes.
std::string report_to_json(const EvalReport& report);

}  // namespace reprank

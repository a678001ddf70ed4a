#pragma once

#include <algorithm>

#include "reprank/transition.hpp"
#include "reprank/vectors.hpp"

namespace reprank {

/// Coefficients and stopping rule for the reputation solvers.
///
/// All three alphas must lie strictly inside (0,1); that makes the iteration
/// map an L1 contraction with coefficient max(alpha1, alpha2), so the fixed
/// point exists, is unique and is reached geometrically from any start.
struct SolverConfig {
    double alpha1 = 0.85;      // forward trust weight
    double alpha2 = 0.85;      // backward mistrust weight
    double alpha3 = 0.15;      // seed injection weight
    double tolerance = 1e-10;  // L1 change between successive iterates
    int max_iterations = 1000;

    void validate() const;  // throws std::invalid_argument
    double contraction() const { return std::max(alpha1, alpha2); }
};

struct SolveResult {
    ScoreVector scores;
    int iterations = 0;
    double final_residual = 0.0;  // L1 change at the accepted iterate
    bool converged = false;
};

/// One step of the reputation iteration:
///
///   I(t) = alpha1 * F * P+(t) + alpha2 * B * P-(t) + alpha3 * d
///
/// F must be a forward operator and B a backward one, all of matching
/// dimension.
ScoreVector apply_iteration(const ScoreVector& t, const TransitionMatrix& forward,
                            const TransitionMatrix& backward, const SeedVector& seeds,
                            const SolverConfig& cfg);

/// Reputation fixed point t = I(t), iterated from t0 = alpha3 * d. Positive
/// scores flow forward along edges, negative scores flow backward. Hitting
/// the iteration cap is reported through `converged`, not thrown: the
/// contraction argument guarantees convergence, so a cap hit points at a
/// configuration or data problem the caller should inspect.
SolveResult reprank_solve(const TransitionMatrix& forward, const TransitionMatrix& backward,
                          const SeedVector& seeds, const SolverConfig& cfg);

/// Forward trust propagation from nonnegative seeds:
///
///   t = alpha * F * t + (1 - alpha) * d
///
/// Throws std::invalid_argument if any seed entry is negative.
SolveResult trustrank_solve(const TransitionMatrix& forward, const SeedVector& seeds,
                            double alpha, double tolerance = 1e-10, int max_iterations = 1000);

/// Backward mistrust propagation, the same recurrence over the backward
/// operator. Seeds carry nonnegative badness mass; higher score = more spammy.
SolveResult antitrustrank_solve(const TransitionMatrix& backward, const SeedVector& bad_seeds,
                                double alpha, double tolerance = 1e-10, int max_iterations = 1000);

/// Inverts the fixed point: returns the seed vector whose reputation solution
/// is exactly t,
///
///   d = (t - alpha1 * F * P+(t) - alpha2 * B * P-(t)) / alpha3
SeedVector recover_seed(const ScoreVector& t, const TransitionMatrix& forward,
                        const TransitionMatrix& backward, const SolverConfig& cfg);

}  // namespace reprank

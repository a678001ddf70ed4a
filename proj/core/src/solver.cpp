#include "reprank/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace reprank {

namespace {

void check_unit_interval(double a, const char* name)
{
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument(std::string(name) + " must lie strictly in (0, 1)");
}

void check_stopping(double tolerance, int max_iterations)
{
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

void check_operators(const TransitionMatrix& forward, const TransitionMatrix& backward,
                     std::size_t n)
{
    if (forward.direction() != Direction::forward)
        throw std::invalid_argument("expected a forward transition matrix");
    if (backward.direction() != Direction::backward)
        throw std::invalid_argument("expected a backward transition matrix");
    if (forward.dimension() != n || backward.dimension() != n)
        throw std::invalid_argument("operator/vector dimension mismatch");
}

// Scratch buffers reused across iterations.
struct Workspace {
    ScoreVector positive;
    ScoreVector negative;
    explicit Workspace(std::size_t n) : positive(n), negative(n) {}
};

// out = alpha1 * F * P+(t) + alpha2 * B * P-(t) + alpha3 * d
void reputation_step(std::span<const double> t, const TransitionMatrix& forward,
                     const TransitionMatrix& backward, std::span<const double> seeds,
                     const SolverConfig& cfg, Workspace& ws, std::span<double> out)
{
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = t[i];
        ws.positive[i] = v > 0.0 ? v : 0.0;
        ws.negative[i] = v < 0.0 ? v : 0.0;
        out[i] = cfg.alpha3 * seeds[i];
    }
    forward.apply_add(ws.positive, cfg.alpha1, out);
    backward.apply_add(ws.negative, cfg.alpha2, out);
}

// Runs t_{k+1} = step(t_k) until the L1 change drops to the tolerance. The
// returned iterate is the newest one; its true fixed-point residual is then
// at most contraction * final_residual.
template <typename Step>
SolveResult iterate(ScoreVector t0, double tolerance, int max_iterations, Step step)
{
    SolveResult res;
    ScoreVector t = std::move(t0);
    ScoreVector next(t.size());
    for (int k = 1; k <= max_iterations; ++k) {
        step(t, next);
        double delta = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) delta += std::abs(next[i] - t[i]);
        t.swap(next);
        res.iterations = k;
        res.final_residual = delta;
        if (delta <= tolerance) {
            res.converged = true;
            break;
        }
    }
    res.scores = std::move(t);
    return res;
}

ScoreVector scaled(std::span<const double> v, double s)
{
    ScoreVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

void require_nonnegative(const SeedVector& seeds, const char* who)
{
    for (double d : seeds)
        if (d < 0.0)
            throw std::invalid_argument(std::string(who) + ": seed entries must be nonnegative");
}

SolveResult damped_walk_solve(const TransitionMatrix& op, const SeedVector& seeds,
                              double alpha, double tolerance, int max_iterations,
                              const char* who)
{
    check_unit_interval(alpha, "alpha");
    check_stopping(tolerance, max_iterations);
    require_nonnegative(seeds, who);
    if (op.dimension() != seeds.size())
        throw std::invalid_argument("operator/seed dimension mismatch");

    // t = alpha * M * t + (1 - alpha) * d, from t0 = (1 - alpha) * d.
    ScoreVector injected = scaled(seeds, 1.0 - alpha);
    return iterate(injected, tolerance, max_iterations,
                   [&](const ScoreVector& t, ScoreVector& out) {
                       std::copy(injected.begin(), injected.end(), out.begin());
                       op.apply_add(t, alpha, out);
                   });
}

}  // namespace

void SolverConfig::validate() const
{
    check_unit_interval(alpha1, "alpha1");
    check_unit_interval(alpha2, "alpha2");
    check_unit_interval(alpha3, "alpha3");
    check_stopping(tolerance, max_iterations);
}

ScoreVector apply_iteration(const ScoreVector& t, const TransitionMatrix& forward,
                            const TransitionMatrix& backward, const SeedVector& seeds,
                            const SolverConfig& cfg)
{
    cfg.validate();
    if (t.size() != seeds.size())
        throw std::invalid_argument("score/seed dimension mismatch");
    check_operators(forward, backward, t.size());

    Workspace ws(t.size());
    ScoreVector out(t.size());
    reputation_step(t, forward, backward, seeds, cfg, ws, out);
    return out;
}

SolveResult reprank_solve(const TransitionMatrix& forward, const TransitionMatrix& backward,
                          const SeedVector& seeds, const SolverConfig& cfg)
{
    cfg.validate();
    check_operators(forward, backward, seeds.size());

    Workspace ws(seeds.size());
    return iterate(scaled(seeds, cfg.alpha3), cfg.tolerance, cfg.max_iterations,
                   [&](const ScoreVector& t, ScoreVector& out) {
                       reputation_step(t, forward, backward, seeds, cfg, ws, out);
                   });
}

SolveResult trustrank_solve(const TransitionMatrix& forward, const SeedVector& seeds,
                            double alpha, double tolerance, int max_iterations)
{
    if (forward.direction() != Direction::forward)
        throw std::invalid_argument("trustrank_solve: expected a forward transition matrix");
    return damped_walk_solve(forward, seeds, alpha, tolerance, max_iterations,
                             "trustrank_solve");
}

SolveResult antitrustrank_solve(const TransitionMatrix& backward, const SeedVector& bad_seeds,
                                double alpha, double tolerance, int max_iterations)
{
    if (backward.direction() != Direction::backward)
        throw std::invalid_argument("antitrustrank_solve: expected a backward transition matrix");
    return damped_walk_solve(backward, bad_seeds, alpha, tolerance, max_iterations,
                             "antitrustrank_solve");
}

SeedVector recover_seed(const ScoreVector& t, const TransitionMatrix& forward,
                        const TransitionMatrix& backward, const SolverConfig& cfg)
{
    cfg.validate();
    check_operators(forward, backward, t.size());

    SeedVector d(t.begin(), t.end());
    forward.apply_add(project_positive(t), -cfg.alpha1, d);
    backward.apply_add(project_negative(t), -cfg.alpha2, d);
    for (double& x : d) x /= cfg.alpha3;
    return d;
}

}  // namespace reprank

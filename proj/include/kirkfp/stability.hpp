#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kirkfp/analysis.hpp"
#include "kirkfp/scheme.hpp"

namespace kirkfp {

/// How the approximate sequence y_n is produced from the exact step:
/// y_{n+1} = step(T, cfg, y_n, n) + δ_n. Deterministic kinds place δ_n on the
/// first coordinate axis so ‖δ_n‖ equals the nominal magnitude in every norm.
///   none             δ_n = 0 (y reproduces the exact run bit for bit)
///   decaying(c,r)    ‖δ_n‖ = c·r^n, r ∈ [0,1)
///   persistent(c)    ‖δ_n‖ = c
///   random_decaying(c,r,seed)  δ_n uniform in [0, c·r^n]^d, seeded
struct PerturbationModel {
    enum class Kind { None, Decaying, Persistent, RandomDecaying };

    Kind kind = Kind::None;
    double c = 0.0;
    double r = 0.0;
    std::uint64_t seed = 0;

    static PerturbationModel none() { return {}; }
    static PerturbationModel decaying(double c, double r);
    static PerturbationModel persistent(double c);
    static PerturbationModel random_decaying(double c, double r, std::uint64_t seed);

    void validate() const;
};

/// Sequential δ_n generator; must be consumed in step order. Each stream owns
/// its RNG, so concurrent experiments do not share state.
class PerturbationStream {
public:
    PerturbationStream(const PerturbationModel& model, int dim);
    /// δ for the step from y_n to y_{n+1}; call with n = 0, 1, 2, ...
    Vec delta(int n);

private:
    PerturbationModel model_;
    int dim_;
    Rng rng_;
};

struct PerturbedRun {
    std::vector<Vec> points; ///< y_0..y_N (truncated if diverged)
    bool diverged = false;
};

/// Runs y_{n+1} = step(T, cfg, y_n, n) + δ_n for n_steps steps. The scheme's
/// auxiliary levels are recomputed from y_n exactly as the unperturbed step
/// does; perturbation enters only at the top.
PerturbedRun perturbed_run(const Operator& T, const SchemeConfig& cfg, const Vec& y0,
                           const PerturbationModel& model, int n_steps);

/// ε_n = ‖y_{n+1} − step(T, cfg, y_n, n)‖ for each consecutive pair.
std::vector<double> measure_residuals(const Operator& T, const SchemeConfig& cfg,
                                      std::span<const Vec> y);

/// stable_consistent   residuals vanished and y reached q — the stability
///                     implication held
/// hypothesis_failed   residuals did not vanish; the implication is vacuous
/// violation           residuals vanished but y stayed away from q — the
///                     outcome stability rules out (asserted absent)
enum class StabilityVerdict { StableConsistent, HypothesisFailed, Violation };

const char* to_string(StabilityVerdict v);

struct StabilityReport {
    std::vector<double> eps;      ///< ε_0..ε_{N-1}
    std::vector<double> y_errors; ///< ‖y_n − q‖ for n = 0..N
    double eps_tail = 0.0;        ///< mean of the last 10% of ε_n
    double y_tail = 0.0;          ///< mean of the last 10% of ‖y_n − q‖
    StabilityVerdict verdict = StabilityVerdict::StableConsistent;
    /// Converse direction (y_n → q must force ε_n → 0), flagged separately.
    /// Threshold max(tol_eps, 2·tol_y) absorbs the (1+σ) factor of the
    /// converse inequality ε_n ≤ ‖y_{n+1}−q‖ + σ‖y_n−q‖.
    bool converse_violation = false;
    /// Set when the unperturbed run from y0 failed to converge; limits are
    /// then untestable and the verdict is only conditional.
    bool conditional = false;
    bool diverged = false;
    double sigma_sup = 0.0;
    std::uint64_t seed = 0;
};

/// Definition-style stability experiment: perturb, measure residuals, judge
/// the biconditional by tail means over the final 10% of steps. Requires a
/// known fixed point.
StabilityReport stability_verdict(const Operator& T, const SchemeConfig& cfg, const Vec& y0,
                                  const PerturbationModel& model, int n_steps, double tol_eps,
                                  double tol_y);

} // namespace kirkfp

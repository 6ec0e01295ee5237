#pragma once

#include <span>
#include <vector>

#include "kirkfp/scheme.hpp"

namespace kirkfp {

/// The per-step contraction factor σ of a scheme under an operator with
/// contraction constant a, with its additive/multiplicative decomposition.
///
/// kirk-multistep / multistep (k additive terms):
///   σ = α_0 + S_1·β¹_0 + S_1S_2·β²_0 + ... + S_1...S_{k-2}·β^{k-2}_0
///       + S_1...S_{k-1}·F
///   where S_1 = Σ_{i≥1} α_i a^i, S_p = Σ_{i≥1} β^{p-1}_i a^i,
///   and F = Σ_{i≥0} β^{k-1}_i a^i is the last level's full sum.
/// kirk-sp / multistep-sp (single product):
///   σ = Π over all k levels of the full sums Σ_{i≥0} w_i a^i.
///
/// For validated configs with a ∈ [0,1) and positive anchors plus positive
/// mass on some i ≥ 1 power, σ < 1; fully degenerate rows (w_0 = 1
/// everywhere) give σ = 1 — the identity scheme, which contracts nothing.
struct SigmaBreakdown {
    double sigma = 0.0;
    std::vector<double> terms;      ///< additive terms, or the single product
    std::vector<double> inner_sums; ///< the per-level weighted power sums
};

SigmaBreakdown contraction_factor(const SchemeConfig& cfg, double a, int n);

/// True iff σ(cfg, a, n) < 1 for every n in 0..n_steps. False exposes a
/// degenerate (identity-like) scheme; the randomized test suite asserts it
/// never happens over valid anchored configs.
bool verify_contraction_bound(const SchemeConfig& cfg, double a, int n_steps);

/// Largest σ over steps 0..n_steps (schedules may vary per step).
double sigma_sup(const SchemeConfig& cfg, double a, int n_steps);

/// The extremal sequence saturating u_{n+1} ≤ σ·u_n + ε_n: returns
/// u_0..u_{n_max} with u_{n+1} = σ·u_n + ε_n. Any sequence satisfying the
/// recursion inequality with the same σ, u_0, ε is dominated pointwise.
/// Requires σ ∈ [0,1) and ε_n ≥ 0 for the vanishing-limit conclusion.
std::vector<double> dominating_sequence(double sigma, double u0, std::span<const double> eps,
                                        int n_max);

/// Per-step σ_n variant used as an upper envelope for perturbed runs.
std::vector<double> dominating_sequence(std::span<const double> sigmas, double u0,
                                        std::span<const double> eps);

/// Classical perturbation bound for Picard iteration under a plain
/// contraction with constant lambda: for each n,
///   bound_n = d(q, x_{n+1}) + λ^{n+1}·d(x_0, y_0) + Σ_{i=0..n} λ^{n-i}·ε_i,
/// ε_i = ‖y_{i+1} − T y_i‖, and d(q, y_{n+1}) ≤ bound_n for any sequence y.
/// Equality holds when y is the Picard sequence itself.
std::vector<double> ostrowski_bound(const Operator& T, const IterationTrace& picard_trace,
                                    std::span<const Vec> y, double lambda);

struct RateEstimate {
    double fitted_rate = 1.0; ///< exp(slope) of the log-error least-squares fit
    int window_begin = 0;
    int window_end = 0; ///< exclusive
    double r_squared = 0.0;
};

/// Least-squares fit of log err_n against n. Default window skips the first
/// 10% of iterations (transient). Zero errors truncate the window to the
/// positive prefix; an empty window is an error.
RateEstimate estimate_rate(std::span<const double> errors, int begin = -1, int end = -1);
RateEstimate estimate_rate(const IterationTrace& trace, int begin = -1, int end = -1);

} // namespace kirkfp

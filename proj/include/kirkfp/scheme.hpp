#pragma once

#include <string>
#include <vector>

#include "kirkfp/op.hpp"
#include "kirkfp/weights.hpp"

namespace kirkfp {

/// The four iteration families.
///
/// kirk-multistep   x' = α_0 x + Σ_{i≥1} α_i T^i y¹,
///                  y^p = β^p_0 x + Σ_{i≥1} β^p_i T^i y^{p+1}  (p = 1..k-2, anchored on x),
///                  y^{k-1} = Σ_{i≥0} β^{k-1}_i T^i x
/// kirk-sp          three levels, each a full convex combination of powers of
///                  the previous level's output (no x anchor below the top)
/// multistep        x' = (1-α)x + αTy¹, y^i = (1-β^i)x + β^i T y^{i+1},
///                  y^{k-1} = (1-β^{k-1})x + β^{k-1}Tx
/// multistep-sp     like multistep but each inner level blends its own input:
///                  y^i = (1-β^i)y^{i+1} + β^i T y^{i+1}; top blends y¹
///
/// Inner levels of kirk-multistep anchor on x_n itself; kirk-sp levels feed
/// each term with the previous level's output. Their contraction factors
/// differ accordingly (additive vs product form).
enum class Family { KirkMultistep, KirkSp, Multistep, MultistepSp };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

struct SchemeConfig {
    Family family = Family::KirkMultistep;
    int k = 2;                     ///< depth; kirk-sp is fixed at 3
    std::vector<int> powers;       ///< s_1 ≥ s_2 ≥ ... ≥ s_k, one per level; all 1 for multistep families
    WeightSchedule alpha;          ///< top level
    std::vector<WeightSchedule> betas; ///< k-1 inner levels
    /// Kirk families: require every α and β^p row to keep w_0 > 0, which the
    /// σ < 1 contraction argument needs. Disabled only by the
    /// picard/krasnoselskij(1) constructors, which record a warning that the
    /// convergence/stability guarantees lapse.
    bool enforce_anchor_nonzero = true;
    std::vector<std::string> warnings;

    bool is_kirk() const { return family == Family::KirkMultistep || family == Family::KirkSp; }

    /// Throws ValidationError naming the violated invariant. Generated
    /// schedules are checked analytically; constant/tabulated rows exhaustively.
    void validate() const;
};

enum class StopMode { SuccessiveDiff, TrueError };
enum class StopReason { ToleranceMet, MaxIter, Diverged };

const char* to_string(StopReason r);
const char* to_string(StopMode m);

struct IterationTrace {
    std::vector<Vec> points;       ///< x_0..x_N
    std::vector<double> errors;    ///< ‖x_n − q‖ per point when q is known, else empty
    StopReason stop_reason = StopReason::MaxIter;
    StopMode mode = StopMode::SuccessiveDiff;
    int iterations = 0;            ///< steps taken = points.size() - 1
};

/// One step of each family. Pure functions of their inputs; the step index n
/// only selects schedule rows, so tabulated schedules stay pure lookups.
Vec kirk_multistep_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n);
Vec kirk_sp_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n);
Vec multistep_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n);
Vec multistep_sp_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n);

/// Dispatch on cfg.family.
Vec scheme_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n);

/// Iterates the configured step from x0 until the stop criterion, max_iter,
/// or divergence (‖x_n‖ > 1e12 or non-finite). TrueError mode requires a
/// known fixed point and checks before stepping, so x0 = q stops at once.
IterationTrace run(const Operator& T, const SchemeConfig& cfg, const Vec& x0, double tol,
                   int max_iter, StopMode mode);

/// Mode defaults to TrueError when T has a known fixed point.
IterationTrace run(const Operator& T, const SchemeConfig& cfg, const Vec& x0, double tol,
                   int max_iter);

// --- classic schemes realized as parameter settings of the Kirk engines ---

/// x' = Tx. Anchor enforcement off (α row is (0,1)); a warning records that
/// the convergence/stability guarantees lapse.
SchemeConfig picard();
/// x' = (1-λ)x + λTx with constant λ. λ = 1 with enforcement on fails
/// validation; pass enforce=false to obtain Picard.
SchemeConfig krasnoselskij(double lambda, bool enforce_anchor = true);
/// x' = (1-α_n)x + α_n Tx. `alpha` must yield two-point rows (1-α_n, α_n).
SchemeConfig mann(WeightSchedule alpha);
SchemeConfig ishikawa(WeightSchedule alpha, WeightSchedule beta);
SchemeConfig noor(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2);
SchemeConfig sp(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2);
SchemeConfig thianwan(WeightSchedule alpha, WeightSchedule beta);
/// Classic Kirk: x' = Σ α_i T^i x with a constant row.
SchemeConfig kirk(WeightRow alpha_row);
SchemeConfig kirk_mann(WeightSchedule alpha, int s1);
SchemeConfig kirk_ishikawa(WeightSchedule alpha, WeightSchedule beta1, int s1, int s2);
SchemeConfig kirk_noor(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2, int s1,
                       int s2, int s3);
SchemeConfig kirk_sp(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2, int s1,
                     int s2, int s3);

} // namespace kirkfp

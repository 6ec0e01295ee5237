#include "kirkfp/scheme.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace kirkfp {

const char* to_string(Family f) {
    switch (f) {
    case Family::KirkMultistep: return "kirk-multistep";
    case Family::KirkSp: return "kirk-sp";
    case Family::Multistep: return "multistep";
    case Family::MultistepSp: return "multistep-sp";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "kirk-multistep") return Family::KirkMultistep;
    if (s == "kirk-sp") return Family::KirkSp;
    if (s == "multistep") return Family::Multistep;
    if (s == "multistep-sp") return Family::MultistepSp;
    throw ValidationError("unknown scheme family: " + s);
}

const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::ToleranceMet: return "tolerance_met";
    case StopReason::MaxIter: return "max_iter";
    case StopReason::Diverged: return "diverged";
    }
    return "?";
}

const char* to_string(StopMode m) {
    return m == StopMode::SuccessiveDiff ? "successive" : "true_error";
}

namespace {

constexpr double kDivergenceThreshold = 1e12;

void check_row(const WeightRow& row, int s_level, int level, int n, bool enforce_anchor) {
    std::ostringstream where;
    where << "level " << level << " weight row at step " << n;
    row.validate(where.str().c_str());
    if (static_cast<int>(row.size()) != s_level + 1) {
        std::ostringstream os;
        os << "weight row length must equal s+1 for its level (" << where.str() << ": expected "
           << s_level + 1 << ", got " << row.size() << ")";
        throw ValidationError(os.str());
    }
    if (enforce_anchor && !(row.anchor() > 0.0)) {
        std::ostringstream os;
        os << "anchor weight w_0 must be nonzero for Kirk-type schemes (" << where.str() << ")";
        throw ValidationError(os.str());
    }
}

const WeightSchedule& schedule_for_level(const SchemeConfig& cfg, int level) {
    return level == 0 ? cfg.alpha : cfg.betas[static_cast<std::size_t>(level - 1)];
}

// Row for `level` at step n, fully checked. level 0 is the alpha row.
WeightRow level_row(const SchemeConfig& cfg, int level, int n) {
    WeightRow row = schedule_for_level(cfg, level).row_at(n);
    check_row(row, cfg.powers[static_cast<std::size_t>(level)], level, n,
              cfg.is_kirk() && cfg.enforce_anchor_nonzero);
    return row;
}

// acc = w_0 * anchor + sum_{i=1..s} w_i * T^i(base). Powers are produced by
// repeated application in a fixed order, so results are bit-reproducible.
Vec power_combination(const Operator& T, const WeightRow& row, const Vec& base,
                      const Vec& anchor) {
    Vec acc = scaled(row.w[0], anchor);
    Vec t = base;
    for (std::size_t i = 1; i < row.size(); ++i) {
        t = T.apply(t);
        axpy(acc, row.w[i], t);
    }
    return acc;
}

// theta for the two-point rows of the classic multistep families.
double theta_of(const WeightRow& row) { return row.w[1]; }

// (1 - theta) * anchor + theta * T(base), written through the row's own
// entries so the classic engines agree with the Kirk embeddings bitwise.
Vec blend(const Operator& T, const WeightRow& row, const Vec& anchor, const Vec& base) {
    Vec acc = scaled(row.w[0], anchor);
    axpy(acc, theta_of(row), T.apply(base));
    return acc;
}

} // namespace

void SchemeConfig::validate() const {
    if (k < 2) throw ValidationError("scheme depth k must be at least 2");
    if (family == Family::KirkSp && k != 3)
        throw ValidationError("kirk-sp depth is fixed at 3 levels");
    if (static_cast<int>(powers.size()) != k)
        throw ValidationError("powers must list one cap per level (expected " + std::to_string(k) +
                              ", got " + std::to_string(powers.size()) + ")");
    for (int i = 0; i < k; ++i) {
        if (powers[static_cast<std::size_t>(i)] < 0)
            throw ValidationError("power caps must be non-negative");
        if (i > 0 && powers[static_cast<std::size_t>(i)] > powers[static_cast<std::size_t>(i - 1)])
            throw ValidationError("power caps must be non-increasing (s_1 >= s_2 >= ... >= s_k)");
    }
    if (family == Family::Multistep || family == Family::MultistepSp) {
        for (int s : powers)
            if (s != 1)
                throw ValidationError("multistep families use power 1 at every level");
    }
    if (static_cast<int>(betas.size()) != k - 1)
        throw ValidationError("betas must hold k-1 schedules (expected " + std::to_string(k - 1) +
                              ", got " + std::to_string(betas.size()) + ")");

    const bool enforce = is_kirk() && enforce_anchor_nonzero;
    for (int level = 0; level < k; ++level) {
        const WeightSchedule& sched = schedule_for_level(*this, level);
        sched.validate();
        std::size_t expected = static_cast<std::size_t>(powers[static_cast<std::size_t>(level)]) + 1;
        if (sched.row_length() != expected) {
            std::ostringstream os;
            os << "weight row length must equal s+1 for its level (level " << level
               << ": expected " << expected << ", got " << sched.row_length() << ")";
            throw ValidationError(os.str());
        }
        if (enforce && !sched.anchor_always_positive()) {
            std::ostringstream os;
            os << "anchor weight w_0 must be nonzero for Kirk-type schemes (level " << level << ")";
            throw ValidationError(os.str());
        }
    }
}

Vec kirk_multistep_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n) {
    // Bottom level: full convex combination of powers of x.
    Vec y = power_combination(T, level_row(cfg, cfg.k - 1, n), x, x);
    // Inner levels k-2 .. 1 anchor on x itself, not on the level below.
    for (int level = cfg.k - 2; level >= 1; --level)
        y = power_combination(T, level_row(cfg, level, n), y, x);
    return power_combination(T, level_row(cfg, 0, n), y, x);
}

Vec kirk_sp_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n) {
    // Every level, including its i = 0 term, feeds on the previous output.
    Vec y = x;
    for (int level = cfg.k - 1; level >= 0; --level)
        y = power_combination(T, level_row(cfg, level, n), y, y);
    return y;
}

Vec multistep_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n) {
    Vec y = blend(T, level_row(cfg, cfg.k - 1, n), x, x);
    for (int level = cfg.k - 2; level >= 1; --level)
        y = blend(T, level_row(cfg, level, n), x, y);
    return blend(T, level_row(cfg, 0, n), x, y);
}

Vec multistep_sp_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n) {
    Vec y = blend(T, level_row(cfg, cfg.k - 1, n), x, x);
    for (int level = cfg.k - 2; level >= 0; --level)
        y = blend(T, level_row(cfg, level, n), y, y);
    return y;
}

Vec scheme_step(const Operator& T, const SchemeConfig& cfg, const Vec& x, int n) {
    switch (cfg.family) {
    case Family::KirkMultistep: return kirk_multistep_step(T, cfg, x, n);
    case Family::KirkSp: return kirk_sp_step(T, cfg, x, n);
    case Family::Multistep: return multistep_step(T, cfg, x, n);
    case Family::MultistepSp: return multistep_sp_step(T, cfg, x, n);
    }
    throw ValidationError("corrupt scheme family");
}

IterationTrace run(const Operator& T, const SchemeConfig& cfg, const Vec& x0, double tol,
                   int max_iter, StopMode mode) {
    if (!(tol > 0.0)) throw ValidationError("run requires tol > 0");
    if (max_iter < 1) throw ValidationError("run requires max_iter >= 1");
    if (static_cast<int>(x0.size()) != T.dimension())
        throw ValidationError("run: x0 dimension does not match operator");
    if (!is_finite(x0)) throw ValidationError("run: x0 must be finite");
    if (mode == StopMode::TrueError && !T.has_fixed_point())
        throw ValidationError("true_error stop mode requires an operator with known fixed point");
    cfg.validate();

    IterationTrace trace;
    trace.mode = mode;
    trace.points.push_back(x0);
    const bool track_error = T.has_fixed_point();
    if (track_error) trace.errors.push_back(T.distance(x0, T.fixed_point()));

    if (mode == StopMode::TrueError && trace.errors.back() <= tol) {
        trace.stop_reason = StopReason::ToleranceMet;
        trace.iterations = 0;
        return trace;
    }

    trace.stop_reason = StopReason::MaxIter;
    for (int n = 0; n < max_iter; ++n) {
        Vec next;
        try {
            next = scheme_step(T, cfg, trace.points.back(), n);
        } catch (const NumericError&) {
            trace.stop_reason = StopReason::Diverged;
            break;
        }
        if (!is_finite(next)) {
            trace.stop_reason = StopReason::Diverged;
            break;
        }
        trace.points.push_back(next);
        if (track_error) trace.errors.push_back(T.distance(next, T.fixed_point()));

        if (norm(T.norm_kind(), next) > kDivergenceThreshold) {
            trace.stop_reason = StopReason::Diverged;
            break;
        }
        bool met = mode == StopMode::TrueError
                       ? trace.errors.back() <= tol
                       : T.distance(next, trace.points[trace.points.size() - 2]) <= tol;
        if (met) {
            trace.stop_reason = StopReason::ToleranceMet;
            break;
        }
    }
    trace.iterations = static_cast<int>(trace.points.size()) - 1;
    return trace;
}

IterationTrace run(const Operator& T, const SchemeConfig& cfg, const Vec& x0, double tol,
                   int max_iter) {
    return run(T, cfg, x0, tol, max_iter,
               T.has_fixed_point() ? StopMode::TrueError : StopMode::SuccessiveDiff);
}

// ---- classic schemes as Kirk parameter settings ----

namespace {

void require_two_point(const WeightSchedule& s, const char* name) {
    if (s.row_length() != 2)
        throw ValidationError(std::string(name) + " expects two-point rows (1-theta, theta)");
}

} // namespace

SchemeConfig krasnoselskij(double lambda, bool enforce_anchor) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw ValidationError("krasnoselskij requires lambda in [0, 1]");
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {1, 1};
    cfg.alpha = WeightSchedule::constant(WeightRow::two_point(lambda));
    cfg.betas = {WeightSchedule::constant(WeightRow({1.0, 0.0}))};
    cfg.enforce_anchor_nonzero = enforce_anchor;
    if (!enforce_anchor)
        cfg.warnings.push_back("anchor enforcement disabled: the Kirk convergence/stability "
                               "guarantees do not apply");
    cfg.validate();
    return cfg;
}

SchemeConfig picard() { return krasnoselskij(1.0, /*enforce_anchor=*/false); }

SchemeConfig mann(WeightSchedule alpha) {
    require_two_point(alpha, "mann");
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {1, 1};
    cfg.alpha = std::move(alpha);
    cfg.betas = {WeightSchedule::constant(WeightRow({1.0, 0.0}))};
    cfg.validate();
    return cfg;
}

SchemeConfig ishikawa(WeightSchedule alpha, WeightSchedule beta) {
    require_two_point(alpha, "ishikawa");
    require_two_point(beta, "ishikawa");
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {1, 1};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta)};
    cfg.validate();
    return cfg;
}

SchemeConfig noor(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2) {
    require_two_point(alpha, "noor");
    require_two_point(beta1, "noor");
    require_two_point(beta2, "noor");
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 3;
    cfg.powers = {1, 1, 1};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta1), std::move(beta2)};
    cfg.validate();
    return cfg;
}

SchemeConfig sp(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2) {
    require_two_point(alpha, "sp");
    require_two_point(beta1, "sp");
    require_two_point(beta2, "sp");
    SchemeConfig cfg;
    cfg.family = Family::KirkSp;
    cfg.k = 3;
    cfg.powers = {1, 1, 1};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta1), std::move(beta2)};
    cfg.validate();
    return cfg;
}

SchemeConfig thianwan(WeightSchedule alpha, WeightSchedule beta) {
    require_two_point(alpha, "thianwan");
    require_two_point(beta, "thianwan");
    SchemeConfig cfg;
    cfg.family = Family::KirkSp;
    cfg.k = 3;
    cfg.powers = {1, 1, 1};
    cfg.alpha = std::move(alpha);
    // The trailing level is inert ((1,0) row), leaving the two-step scheme.
    cfg.betas = {std::move(beta), WeightSchedule::constant(WeightRow({1.0, 0.0}))};
    cfg.validate();
    return cfg;
}

SchemeConfig kirk(WeightRow alpha_row) {
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {static_cast<int>(alpha_row.size()) - 1, 0};
    cfg.alpha = WeightSchedule::constant(std::move(alpha_row));
    cfg.betas = {WeightSchedule::constant(WeightRow({1.0}))};
    cfg.validate();
    return cfg;
}

SchemeConfig kirk_mann(WeightSchedule alpha, int s1) {
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {s1, 0};
    cfg.alpha = std::move(alpha);
    cfg.betas = {WeightSchedule::constant(WeightRow({1.0}))};
    cfg.validate();
    return cfg;
}

SchemeConfig kirk_ishikawa(WeightSchedule alpha, WeightSchedule beta1, int s1, int s2) {
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = {s1, s2};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta1)};
    cfg.validate();
    return cfg;
}

SchemeConfig kirk_noor(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2, int s1,
                       int s2, int s3) {
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 3;
    cfg.powers = {s1, s2, s3};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta1), std::move(beta2)};
    cfg.validate();
    return cfg;
}

SchemeConfig kirk_sp(WeightSchedule alpha, WeightSchedule beta1, WeightSchedule beta2, int s1,
                     int s2, int s3) {
    SchemeConfig cfg;
    cfg.family = Family::KirkSp;
    cfg.k = 3;
    cfg.powers = {s1, s2, s3};
    cfg.alpha = std::move(alpha);
    cfg.betas = {std::move(beta1), std::move(beta2)};
    cfg.validate();
    return cfg;
}

} // namespace kirkfp

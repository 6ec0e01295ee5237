#include "kirkfp/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace kirkfp {

namespace {

// Weighted power sum Σ w_i a^i over i in [from, row length).
double power_sum(const WeightRow& row, double a, std::size_t from) {
    double s = 0.0;
    double ai = 1.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i >= from) s += row.w[i] * ai;
        ai *= a;
    }
    return s;
}

} // namespace

SigmaBreakdown contraction_factor(const SchemeConfig& cfg, double a, int n) {
    if (!(a >= 0.0 && a < 1.0))
        throw ValidationError("contraction_factor requires a in [0, 1)");
    cfg.validate();

    SigmaBreakdown out;
    const int k = cfg.k;

    if (cfg.family == Family::KirkSp || cfg.family == Family::MultistepSp) {
        // Product of full per-level sums. For the three-level Kirk-SP this is
        // the scheme's own factor; the multistep-sp family reuses it with one
        // factor per level (unit powers), which k = 3 reduces to exactly.
        double prod = 1.0;
        WeightRow row = cfg.alpha.row_at(n);
        double b = power_sum(row, a, 0);
        out.inner_sums.push_back(b);
        prod *= b;
        for (const auto& beta : cfg.betas) {
            b = power_sum(beta.row_at(n), a, 0);
            out.inner_sums.push_back(b);
            prod *= b;
        }
        out.terms = {prod};
        out.sigma = prod;
        return out;
    }

    // Additive form. Levels 0..k-2 contribute Σ_{i>=1} w_i a^i factors; the
    // bottom level contributes its full sum.
    WeightRow alpha_row = cfg.alpha.row_at(n);
    std::vector<double> partial_sums; // S_0 .. S_{k-2}
    partial_sums.push_back(power_sum(alpha_row, a, 1));
    for (int p = 1; p <= k - 2; ++p)
        partial_sums.push_back(power_sum(cfg.betas[static_cast<std::size_t>(p - 1)].row_at(n), a, 1));
    double full_last = power_sum(cfg.betas[static_cast<std::size_t>(k - 2)].row_at(n), a, 0);

    out.inner_sums = partial_sums;
    out.inner_sums.push_back(full_last);

    out.terms.push_back(alpha_row.anchor());
    double prod = 1.0;
    for (int m = 1; m <= k - 2; ++m) {
        prod *= partial_sums[static_cast<std::size_t>(m - 1)];
        out.terms.push_back(prod * cfg.betas[static_cast<std::size_t>(m - 1)].row_at(n).anchor());
    }
    prod *= partial_sums.back();
    out.terms.push_back(prod * full_last);

    double sigma = 0.0;
    for (double t : out.terms) sigma += t;
    out.sigma = sigma;
    return out;
}

bool verify_contraction_bound(const SchemeConfig& cfg, double a, int n_steps) {
    for (int n = 0; n <= n_steps; ++n)
        if (!(contraction_factor(cfg, a, n).sigma < 1.0)) return false;
    return true;
}

double sigma_sup(const SchemeConfig& cfg, double a, int n_steps) {
    double sup = 0.0;
    for (int n = 0; n <= n_steps; ++n)
        sup = std::max(sup, contraction_factor(cfg, a, n).sigma);
    return sup;
}

std::vector<double> dominating_sequence(double sigma, double u0, std::span<const double> eps,
                                        int n_max) {
    if (!(sigma >= 0.0 && sigma < 1.0))
        throw ValidationError("dominating_sequence requires sigma in [0, 1)");
    if (n_max < 0) throw ValidationError("dominating_sequence requires n_max >= 0");
    if (static_cast<int>(eps.size()) < n_max)
        throw ValidationError("dominating_sequence needs at least n_max residual entries");
    std::vector<double> u;
    u.reserve(static_cast<std::size_t>(n_max) + 1);
    u.push_back(u0);
    for (int n = 0; n < n_max; ++n)
        u.push_back(sigma * u.back() + eps[static_cast<std::size_t>(n)]);
    return u;
}

std::vector<double> dominating_sequence(std::span<const double> sigmas, double u0,
                                        std::span<const double> eps) {
    if (sigmas.size() != eps.size())
        throw ValidationError("dominating_sequence: one sigma per residual entry");
    std::vector<double> u;
    u.reserve(sigmas.size() + 1);
    u.push_back(u0);
    for (std::size_t n = 0; n < sigmas.size(); ++n) {
        if (!(sigmas[n] >= 0.0 && sigmas[n] < 1.0))
            throw ValidationError("dominating_sequence requires sigma in [0, 1)");
        u.push_back(sigmas[n] * u.back() + eps[n]);
    }
    return u;
}

std::vector<double> ostrowski_bound(const Operator& T, const IterationTrace& picard_trace,
                                    std::span<const Vec> y, double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw ValidationError("ostrowski_bound requires lambda in [0, 1)");
    if (!T.has_fixed_point())
        throw ValidationError("ostrowski_bound requires an operator with known fixed point");
    if (picard_trace.points.size() < 2 || y.size() < 2)
        throw ValidationError("ostrowski_bound needs at least two points per sequence");

    const Vec& q = T.fixed_point();
    const std::size_t N = std::min(picard_trace.points.size(), y.size()) - 1;
    const double d0 = T.distance(picard_trace.points[0], y[0]);

    std::vector<double> bounds;
    bounds.reserve(N);
    double running = 0.0;  // Σ_{i<=n} λ^{n-i} ε_i
    double lam_pow = 1.0;  // λ^{n+1}
    for (std::size_t n = 0; n < N; ++n) {
        double eps_n = T.distance(y[n + 1], T.apply(y[n]));
        running = lambda * running + eps_n;
        lam_pow *= lambda;
        bounds.push_back(T.distance(q, picard_trace.points[n + 1]) + lam_pow * d0 + running);
    }
    return bounds;
}

RateEstimate estimate_rate(std::span<const double> errors, int begin, int end) {
    const int n = static_cast<int>(errors.size());
    if (begin < 0) begin = n / 10; // default window skips the transient
    if (end < 0) end = n;
    if (begin < 0 || end > n || begin >= end)
        throw ValidationError("estimate_rate: empty or out-of-range window");

    // Truncate at the first non-positive error: log stops being defined there.
    int stop = begin;
    while (stop < end && errors[static_cast<std::size_t>(stop)] > 0.0) ++stop;
    end = stop;
    if (end - begin < 2)
        throw ValidationError("estimate_rate: window has fewer than two positive errors");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int m = end - begin;
    for (int i = begin; i < end; ++i) {
        double x = i, yv = std::log(errors[static_cast<std::size_t>(i)]);
        sx += x;
        sy += yv;
        sxx += x * x;
        sxy += x * yv;
    }
    double var = sxx - sx * sx / m;
    double slope = var > 0.0 ? (sxy - sx * sy / m) / var : 0.0;
    double intercept = (sy - slope * sx) / m;

    double ss_res = 0, ss_tot = 0;
    double mean_y = sy / m;
    for (int i = begin; i < end; ++i) {
        double yv = std::log(errors[static_cast<std::size_t>(i)]);
        double fit = intercept + slope * i;
        ss_res += (yv - fit) * (yv - fit);
        ss_tot += (yv - mean_y) * (yv - mean_y);
    }

    RateEstimate est;
    est.fitted_rate = std::exp(slope);
    est.window_begin = begin;
    est.window_end = end;
    est.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return est;
}

RateEstimate estimate_rate(const IterationTrace& trace, int begin, int end) {
    if (trace.errors.empty())
        throw ValidationError("estimate_rate requires a trace with known-fixed-point errors");
    return estimate_rate(std::span<const double>(trace.errors), begin, end);
}

} // namespace kirkfp

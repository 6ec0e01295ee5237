#include "kirkfp/stability.hpp"

#include <algorithm>
#include <cmath>

namespace kirkfp {

PerturbationModel PerturbationModel::decaying(double c, double r) {
    PerturbationModel m;
    m.kind = Kind::Decaying;
    m.c = c;
    m.r = r;
    m.validate();
    return m;
}

PerturbationModel PerturbationModel::persistent(double c) {
    PerturbationModel m;
    m.kind = Kind::Persistent;
    m.c = c;
    m.validate();
    return m;
}

PerturbationModel PerturbationModel::random_decaying(double c, double r, std::uint64_t seed) {
    PerturbationModel m;
    m.kind = Kind::RandomDecaying;
    m.c = c;
    m.r = r;
    m.seed = seed;
    m.validate();
    return m;
}

void PerturbationModel::validate() const {
    if (!(c >= 0.0)) throw ValidationError("perturbation magnitude c must be >= 0");
    if ((kind == Kind::Decaying || kind == Kind::RandomDecaying) && !(r >= 0.0 && r < 1.0))
        throw ValidationError("decaying perturbation ratio r must lie in [0, 1)");
}

PerturbationStream::PerturbationStream(const PerturbationModel& model, int dim)
    : model_(model), dim_(dim), rng_(model.seed) {
    model.validate();
    if (dim < 1) throw ValidationError("perturbation stream dimension must be >= 1");
}

Vec PerturbationStream::delta(int n) {
    Vec d(static_cast<std::size_t>(dim_), 0.0);
    switch (model_.kind) {
    case PerturbationModel::Kind::None: break;
    case PerturbationModel::Kind::Decaying: d[0] = model_.c * std::pow(model_.r, n); break;
    case PerturbationModel::Kind::Persistent: d[0] = model_.c; break;
    case PerturbationModel::Kind::RandomDecaying: {
        double cap = model_.c * std::pow(model_.r, n);
        for (auto& x : d) x = rng_.uniform(0.0, cap);
        break;
    }
    }
    return d;
}

PerturbedRun perturbed_run(const Operator& T, const SchemeConfig& cfg, const Vec& y0,
                           const PerturbationModel& model, int n_steps) {
    if (n_steps < 1) throw ValidationError("perturbed_run requires n_steps >= 1");
    if (static_cast<int>(y0.size()) != T.dimension())
        throw ValidationError("perturbed_run: y0 dimension does not match operator");
    cfg.validate();

    PerturbedRun out;
    out.points.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.points.push_back(y0);
    PerturbationStream stream(model, T.dimension());

    for (int n = 0; n < n_steps; ++n) {
        Vec next;
        try {
            next = scheme_step(T, cfg, out.points.back(), n);
        } catch (const NumericError&) {
            out.diverged = true;
            break;
        }
        // Perturbation enters at the top level only; the auxiliary levels
        // inside scheme_step are recomputed from y_n.
        if (model.kind != PerturbationModel::Kind::None) {
            Vec d = stream.delta(n);
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += d[i];
        }
        if (!is_finite(next) || norm(T.norm_kind(), next) > 1e12) {
            out.diverged = true;
            break;
        }
        out.points.push_back(std::move(next));
    }
    return out;
}

std::vector<double> measure_residuals(const Operator& T, const SchemeConfig& cfg,
                                      std::span<const Vec> y) {
    if (y.size() < 2) throw ValidationError("measure_residuals needs at least two points");
    cfg.validate();
    std::vector<double> eps;
    eps.reserve(y.size() - 1);
    for (std::size_t n = 0; n + 1 < y.size(); ++n)
        eps.push_back(T.distance(y[n + 1], scheme_step(T, cfg, y[n], static_cast<int>(n))));
    return eps;
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
    case StabilityVerdict::StableConsistent: return "stable_consistent";
    case StabilityVerdict::HypothesisFailed: return "hypothesis_failed";
    case StabilityVerdict::Violation: return "VIOLATION";
    }
    return "?";
}

namespace {

double tail_mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    std::size_t count = std::max<std::size_t>(1, xs.size() / 10);
    double s = 0.0;
    for (std::size_t i = xs.size() - count; i < xs.size(); ++i) s += xs[i];
    return s / static_cast<double>(count);
}

} // namespace

StabilityReport stability_verdict(const Operator& T, const SchemeConfig& cfg, const Vec& y0,
                                  const PerturbationModel& model, int n_steps, double tol_eps,
                                  double tol_y) {
    if (!T.has_fixed_point())
        throw ValidationError("stability_verdict requires an operator with known fixed point");
    if (!(tol_eps > 0.0 && tol_y > 0.0))
        throw ValidationError("stability_verdict requires positive tolerances");

    StabilityReport rep;
    rep.seed = model.seed;

    // The stability definition presupposes the exact iteration converges;
    // verdicts on a non-convergent base run are only conditional.
    IterationTrace base = run(T, cfg, y0, tol_y, n_steps, StopMode::TrueError);
    rep.conditional = base.stop_reason != StopReason::ToleranceMet;

    PerturbedRun pr = perturbed_run(T, cfg, y0, model, n_steps);
    rep.diverged = pr.diverged;
    rep.eps = measure_residuals(T, cfg, pr.points);
    rep.y_errors.reserve(pr.points.size());
    for (const auto& y : pr.points) rep.y_errors.push_back(T.distance(y, T.fixed_point()));

    rep.eps_tail = tail_mean(rep.eps);
    rep.y_tail = tail_mean(rep.y_errors);

    if (rep.eps_tail > tol_eps)
        rep.verdict = StabilityVerdict::HypothesisFailed;
    else if (rep.y_tail > tol_y)
        rep.verdict = StabilityVerdict::Violation;
    else
        rep.verdict = StabilityVerdict::StableConsistent;

    // Converse direction: y_n → q must force ε_n → 0. The threshold absorbs
    // the (1+σ) factor of ε_n ≤ ‖y_{n+1}−q‖ + σ‖y_n−q‖.
    rep.converse_violation =
        rep.y_tail <= tol_y && rep.eps_tail > std::max(tol_eps, 2.0 * tol_y);

    rep.sigma_sup = sigma_sup(cfg, T.contract_a(), n_steps);
    return rep;
}

} // namespace kirkfp

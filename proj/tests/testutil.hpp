#pragma once

// Shared helpers for the test and acceptance suites: randomized-but-seeded
// generators for valid scheme configurations and starting points.

#include <algorithm>
#include <cmath>
#include <vector>

#include "kirkfp/analysis.hpp"
#include "kirkfp/corpus.hpp"
#include "kirkfp/rng.hpp"
#include "kirkfp/scheme.hpp"

namespace kirkfp::testutil {

struct ConfigGen {
    int k_min = 2, k_max = 5;
    int s1_min = 1, s1_max = 4;
    double anchor_min = 0.05;
    double anchor_max = 1.0; ///< cap the anchor to keep sigma away from 1
    bool include_kirk_sp = true;
};

/// Simplex row of length s+1 with anchor weight in [anchor_min, anchor_max]
/// and the remaining mass spread over the higher powers.
inline WeightRow random_row(Rng& rng, int s, double anchor_min, double anchor_max) {
    if (s == 0) return WeightRow({1.0});
    double w0 = anchor_min + (anchor_max - anchor_min) * rng.uniform();
    std::vector<double> raw(static_cast<std::size_t>(s));
    double total = 0.0;
    for (auto& r : raw) {
        r = -std::log(1.0 - rng.uniform());
        total += r;
    }
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(s) + 1);
    w.push_back(w0);
    double rest = 1.0 - w0;
    for (double r : raw) w.push_back(rest * (r / total));
    return WeightRow(std::move(w));
}

inline std::vector<int> random_powers(Rng& rng, int k, int s1_min, int s1_max) {
    std::vector<int> s;
    s.push_back(rng.uniform_int(s1_min, s1_max));
    for (int level = 1; level < k; ++level) s.push_back(rng.uniform_int(0, s.back()));
    return s;
}

/// Valid random config for either Kirk family, constant schedules.
inline SchemeConfig random_kirk_config(Rng& rng, const ConfigGen& gen = {}) {
    SchemeConfig cfg;
    bool use_sp = gen.include_kirk_sp && rng.uniform() < 0.35;
    cfg.family = use_sp ? Family::KirkSp : Family::KirkMultistep;
    cfg.k = use_sp ? 3 : rng.uniform_int(gen.k_min, gen.k_max);
    cfg.powers = random_powers(rng, cfg.k, gen.s1_min, gen.s1_max);
    cfg.alpha = WeightSchedule::constant(
        random_row(rng, cfg.powers[0], gen.anchor_min, gen.anchor_max));
    for (int level = 1; level < cfg.k; ++level)
        cfg.betas.push_back(WeightSchedule::constant(random_row(
            rng, cfg.powers[static_cast<std::size_t>(level)], gen.anchor_min, gen.anchor_max)));
    cfg.validate();
    return cfg;
}

/// Starting point at distance `scale` from the operator's fixed point (first
/// coordinate offset, so the distance is exact in every norm kind).
inline Vec offset_from_fixed_point(const Operator& T, double scale) {
    Vec x = T.fixed_point();
    x[0] += scale;
    return x;
}

/// Corpus operators in the displacement-condition class with known fixed
/// point (everything except the expanding map).
inline std::vector<const Operator*> contractive_corpus() {
    std::vector<const Operator*> ops;
    for (const auto& op : corpus())
        if (op.declared() != Condition::None && op.has_fixed_point()) ops.push_back(&op);
    return ops;
}

} // namespace kirkfp::testutil

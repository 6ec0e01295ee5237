#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "kirkfp/vec.hpp"

namespace kirkfp {

/// Seeded generator with a platform-independent uniform double mapping.
/// mt19937_64's output sequence is pinned by the standard; the [0,1)
/// conversion avoids std::uniform_real_distribution, whose output is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

/// Draws point pairs uniformly from [-radius, radius]^dim. Each sampler owns
/// its RNG state; do not share one instance across concurrent checks.
class PairSampler {
public:
    PairSampler(int dim, double radius, std::uint64_t seed)
        : dim_(dim), radius_(radius), rng_(seed) {
        if (dim < 1) throw ValidationError("sampler dimension must be >= 1");
        if (!(radius > 0.0)) throw ValidationError("sampler radius must be positive");
    }

    Vec next_point() {
        Vec p(static_cast<std::size_t>(dim_));
        for (auto& c : p) c = rng_.uniform(-radius_, radius_);
        return p;
    }

    std::pair<Vec, Vec> next() {
        Vec a = next_point();
        Vec b = next_point();
        return {std::move(a), std::move(b)};
    }

    int dim() const { return dim_; }
    double radius() const { return radius_; }
    Rng& rng() { return rng_; }

private:
    int dim_;
    double radius_;
    Rng rng_;
};

} // namespace kirkfp

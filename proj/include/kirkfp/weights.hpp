#pragma once

#include <string>
#include <vector>

#include "kirkfp/errors.hpp"

namespace kirkfp {

/// A point on the probability simplex: convex weights w_0..w_s over the
/// operator powers T^0..T^s at one scheme level.
struct WeightRow {
    std::vector<double> w;

    WeightRow() = default;
    explicit WeightRow(std::vector<double> weights) : w(std::move(weights)) {}

    /// (1-theta, theta)
    static WeightRow two_point(double theta) { return WeightRow({1.0 - theta, theta}); }

    double anchor() const { return w.empty() ? 0.0 : w.front(); }
    std::size_t size() const { return w.size(); }

    /// Entries must lie in [0,1] and sum to 1 within 1e-12.
    void validate(const char* where = "weight row") const;
};

/// Per-step weight rows for one scheme level. Three modes:
///   constant   one row for every step
///   tabulated  explicit rows; steps past the table receive the last row
///   generated  rule-driven two-point rows (1-θ_n, θ_n)
class WeightSchedule {
public:
    enum class Mode { Constant, Tabulated, Generated };
    enum class Rule { Harmonic, Geometric };

    /// Defaults to the inert constant row (1.0).
    WeightSchedule() : rows_{WeightRow({1.0})} {}

    static WeightSchedule constant(WeightRow row);
    static WeightSchedule constant(std::vector<double> row) {
        return constant(WeightRow(std::move(row)));
    }
    static WeightSchedule tabulated(std::vector<WeightRow> rows);
    /// θ_n = 1/(n+2)
    static WeightSchedule harmonic();
    /// θ_n = theta0 · ratio^n
    static WeightSchedule geometric(double theta0, double ratio);

    WeightRow row_at(int n) const;

    Mode mode() const { return mode_; }
    Rule rule() const { return rule_; }
    double param(int i) const { return params_[i]; }
    const std::vector<WeightRow>& rows() const { return rows_; }

    /// Row length when statically known; generated schedules always yield 2.
    std::size_t row_length() const;

    /// True if every row this schedule can produce has a strictly positive
    /// anchor weight w_0.
    bool anchor_always_positive() const;

    void validate() const;

private:
    Mode mode_ = Mode::Constant;
    Rule rule_ = Rule::Harmonic;
    std::vector<WeightRow> rows_;
    double params_[2] = {0.0, 0.0};
};

} // namespace kirkfp

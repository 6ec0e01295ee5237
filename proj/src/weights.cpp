#include "kirkfp/weights.hpp"

#include <cmath>
#include <sstream>

namespace kirkfp {

void WeightRow::validate(const char* where) const {
    if (w.empty()) throw ValidationError(std::string(where) + " must not be empty");
    double sum = 0.0;
    for (double wi : w) {
        if (!(wi >= 0.0 && wi <= 1.0)) {
            std::ostringstream os;
            os << where << " entries must lie in [0, 1] (got " << wi << ")";
            throw ValidationError(os.str());
        }
        sum += wi;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << where << " must sum to 1 within 1e-12 (sum = " << sum << ")";
        throw ValidationError(os.str());
    }
}

WeightSchedule WeightSchedule::constant(WeightRow row) {
    WeightSchedule s;
    s.mode_ = Mode::Constant;
    s.rows_ = {std::move(row)};
    return s;
}

WeightSchedule WeightSchedule::tabulated(std::vector<WeightRow> rows) {
    if (rows.empty()) throw ValidationError("tabulated weight schedule needs at least one row");
    WeightSchedule s;
    s.mode_ = Mode::Tabulated;
    s.rows_ = std::move(rows);
    return s;
}

WeightSchedule WeightSchedule::harmonic() {
    WeightSchedule s;
    s.mode_ = Mode::Generated;
    s.rule_ = Rule::Harmonic;
    return s;
}

WeightSchedule WeightSchedule::geometric(double theta0, double ratio) {
    if (!(theta0 >= 0.0 && theta0 <= 1.0))
        throw ValidationError("geometric schedule requires theta0 in [0, 1]");
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw ValidationError("geometric schedule requires ratio in [0, 1]");
    WeightSchedule s;
    s.mode_ = Mode::Generated;
    s.rule_ = Rule::Geometric;
    s.params_[0] = theta0;
    s.params_[1] = ratio;
    return s;
}

WeightRow WeightSchedule::row_at(int n) const {
    if (n < 0) throw ValidationError("weight schedule step index must be >= 0");
    switch (mode_) {
    case Mode::Constant: return rows_.front();
    case Mode::Tabulated: {
        // Steps past the table receive the last row (documented clamp).
        std::size_t i = static_cast<std::size_t>(n);
        return i < rows_.size() ? rows_[i] : rows_.back();
    }
    case Mode::Generated: {
        double theta = rule_ == Rule::Harmonic ? 1.0 / (n + 2.0)
                                               : params_[0] * std::pow(params_[1], n);
        return WeightRow::two_point(theta);
    }
    }
    throw ValidationError("corrupt weight schedule");
}

std::size_t WeightSchedule::row_length() const {
    if (mode_ == Mode::Generated) return 2;
    return rows_.front().size();
}

bool WeightSchedule::anchor_always_positive() const {
    switch (mode_) {
    case Mode::Constant:
    case Mode::Tabulated:
        for (const auto& r : rows_)
            if (!(r.anchor() > 0.0)) return false;
        return true;
    case Mode::Generated:
        // harmonic: theta_n <= 1/2; geometric: theta_n <= theta0.
        return rule_ == Rule::Harmonic || params_[0] < 1.0;
    }
    return false;
}

void WeightSchedule::validate() const {
    if (mode_ == Mode::Generated) return; // parameters validated at construction
    std::size_t len = rows_.front().size();
    for (const auto& r : rows_) {
        r.validate();
        if (r.size() != len)
            throw ValidationError("all rows of one weight schedule must share a length");
    }
}

} // namespace kirkfp

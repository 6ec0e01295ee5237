#pragma once

#include <ostream>
#include <span>

#include "kirkfp/format.hpp"

#include "kirkfp/scheme.hpp"
#include "kirkfp/stability.hpp"

namespace kirkfp {

/// Columns: n, x_0..x_{d-1}, err. err is blank when the fixed point is unknown.
void write_trace_csv(std::ostream& os, const IterationTrace& trace, int dim);

/// Columns: n, sigma, observed. `observed` entries may be NaN (written blank).
void write_sigma_csv(std::ostream& os, std::span<const double> sigma,
                     std::span<const double> observed);

/// Columns: n, eps, y_err; the final data row has a blank eps (y has one more
/// point than there are residuals). A trailing summary row records verdict,
/// tails, sigma and seed.
void write_stability_csv(std::ostream& os, const StabilityReport& report);

} // namespace kirkfp

#include "kirkfp/csv.hpp"

#include <charconv>
#include <cmath>

namespace kirkfp {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace, int dim) {
    os << "n";
    for (int i = 0; i < dim; ++i) os << ",x_" << i;
    os << ",err\n";
    for (std::size_t n = 0; n < trace.points.size(); ++n) {
        os << n;
        for (double c : trace.points[n]) os << ',' << format_double(c);
        os << ',';
        if (!trace.errors.empty()) os << format_double(trace.errors[n]);
        os << '\n';
    }
}

void write_sigma_csv(std::ostream& os, std::span<const double> sigma,
                     std::span<const double> observed) {
    os << "n,sigma,observed\n";
    for (std::size_t n = 0; n < sigma.size(); ++n) {
        os << n << ',' << format_double(sigma[n]) << ',';
        if (n < observed.size() && !std::isnan(observed[n])) os << format_double(observed[n]);
        os << '\n';
    }
}

void write_stability_csv(std::ostream& os, const StabilityReport& report) {
    os << "n,eps,y_err\n";
    for (std::size_t n = 0; n < report.y_errors.size(); ++n) {
        os << n << ',';
        if (n < report.eps.size()) os << format_double(report.eps[n]);
        os << ',' << format_double(report.y_errors[n]) << '\n';
    }
    os << "summary," << to_string(report.verdict) << ",eps_tail=" << format_double(report.eps_tail)
       << ",y_tail=" << format_double(report.y_tail) << ",sigma=" << format_double(report.sigma_sup)
       << ",seed=" << report.seed << '\n';
}

} // namespace kirkfp

#include "kirkfp/phi.hpp"

#include <cmath>

#include "kirkfp/format.hpp"
#include "kirkfp/rng.hpp"

namespace kirkfp {

Phi Phi::linear(double c) {
    if (!(c >= 0.0)) throw ValidationError("phi linear coefficient must satisfy c >= 0");
    return Phi(Kind::Linear, c);
}

Phi Phi::saturating(double c) {
    if (!(c >= 0.0)) throw ValidationError("phi saturating coefficient must satisfy c >= 0");
    return Phi(Kind::Saturating, c);
}

double Phi::operator()(double u) const {
    switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Linear: return c_ * u;
    case Kind::Saturating: return c_ * u / (1.0 + u);
    }
    return 0.0;
}

double Phi::compose(double u, int j) const {
    if (j < 0) throw ValidationError("phi composition count must be >= 0");
    double v = u;
    for (int a = 0; a < j; ++a) v = (*this)(v);
    return v;
}

std::string Phi::to_string() const {
    switch (kind_) {
    case Kind::Zero: return "zero";
    case Kind::Linear: return "linear(" + format_double(c_) + ")";
    case Kind::Saturating: return "saturating(" + format_double(c_) + ")";
    }
    return "?";
}

Phi Phi::parse(const std::string& text) {
    if (text == "zero") return zero();
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open != std::string::npos && close != std::string::npos && close > open) {
        std::string name = text.substr(0, open);
        double c = std::stod(text.substr(open + 1, close - open - 1));
        if (name == "linear") return linear(c);
        if (name == "saturating") return saturating(c);
    }
    throw ValidationError("cannot parse phi: '" + text + "' (expected zero | linear(c) | saturating(c))");
}

PhiAxiomReport check_phi_axioms(const Phi& phi, std::uint64_t seed, int n_samples, double tol) {
    PhiAxiomReport rep;
    Rng rng(seed);

    auto violated = [&](double lhs, double rhs) { return lhs > rhs * (1.0 + 1e-12) + tol; };

    if (std::abs(phi(0.0)) > tol)
        rep.violations.push_back({"zero-at-zero", 0.0, 0.0, phi(0.0), 0.0});
    ++rep.samples_tested;

    for (int i = 0; i < n_samples; ++i) {
        double u = rng.uniform(0.0, 100.0);
        double v = rng.uniform(0.0, 100.0);

        // monotone, non-strict: u1 <= u2 implies phi(u1) <= phi(u2)
        double lo = std::min(u, v), hi = std::max(u, v);
        if (violated(phi(lo), phi(hi)))
            rep.violations.push_back({"monotone", lo, hi, phi(lo), phi(hi)});

        if (violated(phi(u + v), phi(u) + phi(v)))
            rep.violations.push_back({"subadditive", u, v, phi(u + v), phi(u) + phi(v)});

        // scaling phi(L*u) <= L*phi(u): violation for L >= 1, warning below.
        double L = rng.uniform(0.0, 10.0);
        if (violated(phi(L * u), L * phi(u))) {
            PhiAxiomIssue issue{"scaling", u, L, phi(L * u), L * phi(u)};
            if (L >= 1.0)
                rep.violations.push_back(issue);
            else
                rep.warnings.push_back(issue);
        }
        rep.samples_tested += 3;
    }
    return rep;
}

} // namespace kirkfp

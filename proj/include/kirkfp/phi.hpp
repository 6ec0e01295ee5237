#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kirkfp/errors.hpp"

namespace kirkfp {

/// Comparison function φ: R+ → R+ used by the displacement-based contractive
/// condition. Required axioms: φ(0)=0, monotone non-decreasing, subadditive,
/// and φ(L·u) ≤ L·φ(u). Three concrete kinds:
///   zero         u ↦ 0
///   linear(c)    u ↦ c·u,           c ≥ 0
///   saturating(c) u ↦ c·u/(1+u),    c ≥ 0   (scaling axiom fails for L < 1)
class Phi {
public:
    enum class Kind { Zero, Linear, Saturating };

    static Phi zero() { return Phi(Kind::Zero, 0.0); }
    static Phi linear(double c);
    static Phi saturating(double c);

    double operator()(double u) const;

    /// j-fold composition φ(φ(...φ(u))); j = 0 returns u.
    double compose(double u, int j) const;

    Kind kind() const { return kind_; }
    double coeff() const { return c_; }

    std::string to_string() const;
    static Phi parse(const std::string& text);

private:
    Phi(Kind k, double c) : kind_(k), c_(c) {}
    Kind kind_;
    double c_;
};

struct PhiAxiomIssue {
    std::string axiom; // "zero-at-zero" | "monotone" | "subadditive" | "scaling"
    double u, v;       // sampled arguments (v carries L for the scaling axiom)
    double lhs, rhs;
};

/// Violations break an axiom outright; warnings record scaling failures at
/// L < 1, which the saturating kind exhibits and which the axiom's usual
/// statement does not decide cleanly.
struct PhiAxiomReport {
    int samples_tested = 0;
    std::vector<PhiAxiomIssue> violations;
    std::vector<PhiAxiomIssue> warnings;
    bool ok() const { return violations.empty(); }
};

PhiAxiomReport check_phi_axioms(const Phi& phi, std::uint64_t seed, int n_samples,
                                double tol = 1e-10);

} // namespace kirkfp

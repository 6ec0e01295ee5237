#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kirkfp/phi.hpp"
#include "kirkfp/rng.hpp"
#include "kirkfp/vec.hpp"

namespace kirkfp {

/// Contractive condition classes, ordered roughly strongest to weakest.
/// banach           d(Tx,Ty) ≤ a·d(x,y)
/// ciric            d(Tx,Ty) ≤ a·max{d(x,y), d(x,Ty), d(y,Tx)}
/// ciric_gen        d(Tx,Ty) ≤ a·max{d(x,y), (d(x,Tx)+d(y,Ty))/2, d(x,Ty), d(y,Tx)}
/// osilike          d(Tx,Ty) ≤ L·d(x,Tx) + a·d(x,y)
/// imoru_olatinwo   d(Tx,Ty) ≤ φ(d(x,Tx)) + a·d(x,y)
/// The last two are asymmetric in (x,y); checkers evaluate both orders.
enum class Condition {
    Banach,
    Ciric,
    CiricGen,
    Osilike,
    ImoruOlatinwo,
    IterateBound, // tag for iterate-distance-bound verification reports
    None,
};

const char* to_string(Condition c);
Condition condition_from_string(const std::string& s);

/// Self-map of R^d with declared contractive constants. Immutable after
/// construction; all member operations are pure and thread-safe.
class Operator {
public:
    using MapFn = std::function<Vec(const Vec&)>;

    struct Init {
        std::string id;
        int dimension = 1;
        MapFn map;
        double contract_a = 0.0; ///< the a/λ of the contractive conditions, in [0,1)
        double contract_L = 0.0; ///< the L of the displacement term, ≥ 0
        Phi phi = Phi::zero();
        NormKind norm = NormKind::Euclidean;
        Condition declared = Condition::None;
        /// Candidate fixed points. At most one may pass the residual test
        /// ‖Tq − q‖ ≤ 1e−12·(1+‖q‖); two distinct passing candidates reject
        /// the operator (a contractive-like map has a unique fixed point).
        std::vector<Vec> fixed_point_candidates;
        bool monotone_1d = false; ///< marks 1-d non-decreasing maps (interval containment holds)
    };

    explicit Operator(Init init);

    /// One application of T. Rejects mismatched dimensions and non-finite output.
    Vec apply(const Vec& x) const;

    /// T applied i times, composing left to right: the i+j-fold power equals
    /// the i-fold power of the j-fold power with the identical floating-point
    /// sequence. i = 0 returns x. Non-finite intermediates raise a NumericError
    /// naming the offending step index.
    Vec apply_power(const Vec& x, long i) const;

    double distance(const Vec& a, const Vec& b) const { return kirkfp::distance(norm_, a, b); }

    const std::string& id() const { return id_; }
    int dimension() const { return dim_; }
    double contract_a() const { return a_; }
    double contract_L() const { return L_; }
    const Phi& phi() const { return phi_; }
    NormKind norm_kind() const { return norm_; }
    Condition declared() const { return declared_; }
    bool has_fixed_point() const { return fixed_point_.has_value(); }
    const Vec& fixed_point() const;
    bool monotone_1d() const { return monotone_1d_; }

private:
    std::string id_;
    int dim_;
    MapFn map_;
    double a_;
    double L_;
    Phi phi_;
    NormKind norm_;
    Condition declared_;
    std::optional<Vec> fixed_point_;
    bool monotone_1d_;
};

struct ConditionViolation {
    Vec x, y;
    double lhs, rhs;
};

struct ConditionReport {
    Condition condition = Condition::None;
    int samples_tested = 0; ///< inequality instances evaluated (two per pair for asymmetric conditions)
    std::vector<ConditionViolation> violations;
    bool satisfied() const { return violations.empty(); }
};

/// Samples point pairs and tests the named inequality with T's declared
/// constants. A violation is recorded when lhs > rhs·(1+1e−12) + tol.
ConditionReport check_condition(const Operator& T, Condition condition, PairSampler& sampler,
                                int n_samples, double tol = 1e-10);

/// Upper bound on ‖T^i x − T^i y‖ for maps in the imoru_olatinwo class:
///   Σ_{j=1..i} C(i,j)·a^{i−j}·φ^j(‖x−Tx‖) + a^i·‖x−y‖
/// with φ^j the j-fold composition. i = 0 gives ‖x−y‖. i is capped at 60
/// (binomial overflow guard).
double iterate_distance_bound(const Operator& T, const Vec& x, const Vec& y, int i);

/// Checks ‖T^i x − T^i y‖ ≤ iterate_distance_bound(...) + tol over sampled
/// pairs for every i in 0..i_max.
ConditionReport verify_iterate_bound(const Operator& T, PairSampler& sampler, int n_samples,
                                     int i_max, double tol = 1e-10);

} // namespace kirkfp

#include "kirkfp/op.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace kirkfp {

const char* to_string(Condition c) {
    switch (c) {
    case Condition::Banach: return "banach";
    case Condition::Ciric: return "ciric";
    case Condition::CiricGen: return "ciric-gen";
    case Condition::Osilike: return "osilike";
    case Condition::ImoruOlatinwo: return "imoru-olatinwo";
    case Condition::IterateBound: return "iterate-bound";
    case Condition::None: return "none";
    }
    return "?";
}

Condition condition_from_string(const std::string& s) {
    if (s == "banach") return Condition::Banach;
    if (s == "ciric") return Condition::Ciric;
    if (s == "ciric-gen") return Condition::CiricGen;
    if (s == "osilike") return Condition::Osilike;
    if (s == "imoru-olatinwo") return Condition::ImoruOlatinwo;
    if (s == "iterate-bound") return Condition::IterateBound;
    if (s == "none") return Condition::None;
    throw ValidationError("unknown condition: " + s);
}

Operator::Operator(Init init)
    : id_(std::move(init.id)),
      dim_(init.dimension),
      map_(std::move(init.map)),
      a_(init.contract_a),
      L_(init.contract_L),
      phi_(init.phi),
      norm_(init.norm),
      declared_(init.declared),
      monotone_1d_(init.monotone_1d) {
    if (dim_ < 1) throw ValidationError("operator dimension must be >= 1");
    if (!map_) throw ValidationError("operator map must be set");
    if (!(a_ >= 0.0 && a_ < 1.0))
        throw ValidationError("contract_a must lie in [0, 1) (operator '" + id_ + "')");
    if (!(L_ >= 0.0)) throw ValidationError("contract_L must be >= 0 (operator '" + id_ + "')");

    // Resolve the fixed point among declared candidates. Residual test:
    // ‖Tq − q‖ ≤ 1e−12·(1 + ‖q‖). Two distinct passing candidates reject the
    // operator, since a contractive-like map's fixed point is unique.
    std::vector<Vec> passing;
    for (const auto& q : init.fixed_point_candidates) {
        if (static_cast<int>(q.size()) != dim_)
            throw ValidationError("fixed-point candidate dimension mismatch (operator '" + id_ + "')");
        double resid = distance(map_(q), q);
        if (resid <= 1e-12 * (1.0 + norm(norm_, q))) passing.push_back(q);
    }
    for (std::size_t i = 0; i + 1 < passing.size(); ++i) {
        if (distance(passing[i], passing[i + 1]) > 1e-9)
            throw ValidationError("fixed-point uniqueness violated: two distinct candidates pass "
                                  "the residual test (operator '" + id_ + "')");
    }
    if (!passing.empty())
        fixed_point_ = passing.front();
    else if (!init.fixed_point_candidates.empty())
        throw ValidationError("declared fixed point fails the residual test ‖Tq−q‖ ≤ "
                              "1e−12·(1+‖q‖) (operator '" + id_ + "')");
}

const Vec& Operator::fixed_point() const {
    if (!fixed_point_) throw ValidationError("operator '" + id_ + "' has no known fixed point");
    return *fixed_point_;
}

Vec Operator::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw ValidationError("operator '" + id_ + "' expects dimension " + std::to_string(dim_) +
                              ", got " + std::to_string(x.size()));
    Vec y = map_(x);
    if (static_cast<int>(y.size()) != dim_)
        throw ValidationError("operator '" + id_ + "' map changed dimension");
    if (!is_finite(y)) throw NumericError("operator '" + id_ + "' produced a non-finite value");
    return y;
}

Vec Operator::apply_power(const Vec& x, long i) const {
    if (i < 0) throw ValidationError("apply_power exponent must be >= 0");
    if (static_cast<int>(x.size()) != dim_)
        throw ValidationError("apply_power: dimension mismatch for operator '" + id_ + "'");
    Vec v = x;
    for (long step = 1; step <= i; ++step) {
        v = map_(v);
        if (!is_finite(v))
            throw NumericError("apply_power: non-finite value at step " + std::to_string(step) +
                               " of " + std::to_string(i) + " (operator '" + id_ + "')");
    }
    return v;
}

namespace {

bool exceeds(double lhs, double rhs, double tol) { return lhs > rhs * (1.0 + 1e-12) + tol; }

// Right-hand side of the named condition for the ordered pair (x, y).
double condition_rhs(const Operator& T, Condition c, const Vec& x, const Vec& y, const Vec& Tx,
                     const Vec& Ty) {
    const double a = T.contract_a();
    switch (c) {
    case Condition::Banach: return a * T.distance(x, y);
    case Condition::Ciric:
        return a * std::max({T.distance(x, y), T.distance(x, Ty), T.distance(y, Tx)});
    case Condition::CiricGen:
        return a * std::max({T.distance(x, y), 0.5 * (T.distance(x, Tx) + T.distance(y, Ty)),
                             T.distance(x, Ty), T.distance(y, Tx)});
    case Condition::Osilike: return T.contract_L() * T.distance(x, Tx) + a * T.distance(x, y);
    case Condition::ImoruOlatinwo: return T.phi()(T.distance(x, Tx)) + a * T.distance(x, y);
    default: throw ValidationError("check_condition: unknown condition tag");
    }
}

bool condition_is_asymmetric(Condition c) {
    return c == Condition::Osilike || c == Condition::ImoruOlatinwo;
}

} // namespace

ConditionReport check_condition(const Operator& T, Condition condition, PairSampler& sampler,
                                int n_samples, double tol) {
    if (condition == Condition::None || condition == Condition::IterateBound)
        throw ValidationError("check_condition: unknown condition tag");
    if (n_samples < 1) throw ValidationError("check_condition requires n_samples >= 1");
    if (sampler.dim() != T.dimension())
        throw ValidationError("check_condition: sampler dimension does not match operator");

    ConditionReport rep;
    rep.condition = condition;
    const bool both_orders = condition_is_asymmetric(condition);

    for (int s = 0; s < n_samples; ++s) {
        auto [x, y] = sampler.next();
        Vec Tx = T.apply(x);
        Vec Ty = T.apply(y);

        double lhs = T.distance(Tx, Ty);
        double rhs = condition_rhs(T, condition, x, y, Tx, Ty);
        ++rep.samples_tested;
        if (exceeds(lhs, rhs, tol)) rep.violations.push_back({x, y, lhs, rhs});

        if (both_orders) {
            double rhs2 = condition_rhs(T, condition, y, x, Ty, Tx);
            ++rep.samples_tested;
            if (exceeds(lhs, rhs2, tol)) rep.violations.push_back({y, x, lhs, rhs2});
        }
    }
    return rep;
}

namespace {

// Pascal-row binomials in uint64 (exact for i <= 60; C(60,30) < 2^63).
std::vector<std::uint64_t> binomial_row(int i) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j <= i; ++j)
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j - 1)] * static_cast<std::uint64_t>(i - j + 1) /
            static_cast<std::uint64_t>(j);
    return row;
}

} // namespace

double iterate_distance_bound(const Operator& T, const Vec& x, const Vec& y, int i) {
    if (i < 0) throw ValidationError("iterate_distance_bound exponent must be >= 0");
    if (i > 60)
        throw NumericError("iterate_distance_bound: i > 60 overflows the binomial coefficients");
    require_same_dim(x, y, "iterate_distance_bound");

    const double a = T.contract_a();
    double bound = std::pow(a, i) * T.distance(x, y);
    if (i == 0) return bound; // empty sum, a^0 = 1

    const double displacement = T.distance(x, T.apply(x));
    const auto binom = binomial_row(i);
    double phi_j = displacement; // φ^j(‖x−Tx‖) built up by composition
    for (int j = 1; j <= i; ++j) {
        phi_j = T.phi()(phi_j);
        bound += static_cast<double>(binom[static_cast<std::size_t>(j)]) * std::pow(a, i - j) * phi_j;
    }
    return bound;
}

ConditionReport verify_iterate_bound(const Operator& T, PairSampler& sampler, int n_samples,
                                     int i_max, double tol) {
    if (n_samples < 1) throw ValidationError("verify_iterate_bound requires n_samples >= 1");
    if (i_max < 0) throw ValidationError("verify_iterate_bound requires i_max >= 0");

    ConditionReport rep;
    rep.condition = Condition::IterateBound;

    for (int s = 0; s < n_samples; ++s) {
        auto [x, y] = sampler.next();
        Vec tx = x, ty = y;
        for (int i = 0; i <= i_max; ++i) {
            double lhs = T.distance(tx, ty);
            double rhs = iterate_distance_bound(T, x, y, i);
            ++rep.samples_tested;
            if (exceeds(lhs, rhs, tol)) rep.violations.push_back({x, y, lhs, rhs});
            if (i < i_max) {
                tx = T.apply(tx);
                ty = T.apply(ty);
            }
        }
    }
    return rep;
}

} // namespace kirkfp

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "kirkfp/errors.hpp"

namespace kirkfp {

/// Points of the state space R^d. Dimension is fixed per experiment;
/// mixed-dimension arithmetic is rejected.
using Vec = std::vector<double>;

enum class NormKind { Euclidean, Sup, L1 };

const char* to_string(NormKind k);
NormKind norm_kind_from_string(const std::string& s);

inline bool is_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size())
        throw ValidationError(std::string(where) + ": dimension mismatch (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

double norm(NormKind k, const Vec& v);

inline double distance(NormKind k, const Vec& a, const Vec& b) {
    require_same_dim(a, b, "distance");
    Vec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return norm(k, d);
}

inline Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scaled(double c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

/// y += c * x, elementwise, in a fixed left-to-right order.
inline void axpy(Vec& y, double c, const Vec& x) {
    require_same_dim(y, x, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

} // namespace kirkfp

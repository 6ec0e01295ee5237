#include "kirkfp/vec.hpp"

#include <algorithm>

namespace kirkfp {

const char* to_string(NormKind k) {
    switch (k) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::Sup: return "sup";
    case NormKind::L1: return "l1";
    }
    return "?";
}

NormKind norm_kind_from_string(const std::string& s) {
    if (s == "euclidean" || s == "l2") return NormKind::Euclidean;
    if (s == "sup" || s == "linf") return NormKind::Sup;
    if (s == "l1") return NormKind::L1;
    throw ValidationError("unknown norm kind: " + s);
}

double norm(NormKind k, const Vec& v) {
    switch (k) {
    case NormKind::Euclidean: {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
    case NormKind::Sup: {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    case NormKind::L1: {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    }
    return 0.0;
}

} // namespace kirkfp

#include "kirkfp/corpus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kirkfp/csv.hpp"

namespace kirkfp {

namespace {

// Fixed-point refinement for corpus entries without a closed form. The maps
// are contractions, so a few hundred Picard steps land on the
// double-precision fixed point; construction is deterministic.
Vec picard_refine(const Operator::MapFn& map, Vec x, int iters) {
    for (int i = 0; i < iters; ++i) x = map(x);
    return x;
}

Operator make_affine_2d() {
    // A = [[0.3, 0.1], [0, 0.2]], b = (1, 1). Induced l1 norm of A is
    // exactly 0.3 (both column sums), so a = 0.3 is declared in l1.
    auto map = [](const Vec& v) -> Vec {
        return {0.3 * v[0] + 0.1 * v[1] + 1.0, 0.2 * v[1] + 1.0};
    };
    Operator::Init init;
    init.id = "affine-2d-a03";
    init.dimension = 2;
    init.map = map;
    init.contract_a = 0.3;
    init.norm = NormKind::L1;
    init.declared = Condition::Banach;
    init.fixed_point_candidates = {picard_refine(map, {0.0, 0.0}, 300)};
    return Operator(std::move(init));
}

Operator make_rotation_3d() {
    // A = 0.4 * Rz(pi/6) * Rx(pi/4): 0.4 times an orthogonal matrix, so
    // ‖Az‖₂ = 0.4‖z‖₂ for every z and the contraction constant is tight.
    constexpr double pi = std::numbers::pi;
    const double c = std::cos(pi / 6.0), s = std::sin(pi / 6.0);
    const double cp = std::cos(pi / 4.0), sp = std::sin(pi / 4.0);
    const double a11 = 0.4 * c, a12 = 0.4 * (-s * cp), a13 = 0.4 * (s * sp);
    const double a21 = 0.4 * s, a22 = 0.4 * (c * cp), a23 = 0.4 * (-c * sp);
    const double a31 = 0.0, a32 = 0.4 * sp, a33 = 0.4 * cp;
    auto map = [=](const Vec& v) -> Vec {
        return {a11 * v[0] + a12 * v[1] + a13 * v[2] + 1.0,
                a21 * v[0] + a22 * v[1] + a23 * v[2] - 1.0,
                a31 * v[0] + a32 * v[1] + a33 * v[2] + 0.5};
    };
    Operator::Init init;
    init.id = "rotation-3d";
    init.dimension = 3;
    init.map = map;
    init.contract_a = 0.4;
    init.norm = NormKind::Euclidean;
    init.declared = Condition::Banach;
    init.fixed_point_candidates = {picard_refine(map, {0.0, 0.0, 0.0}, 300)};
    return Operator(std::move(init));
}

Operator make_nonlin_2d() {
    // Jacobian row sums stay below 0.25 + 0.15 = 0.4, so the map is a
    // 0.4-contraction in the sup norm.
    auto map = [](const Vec& v) -> Vec {
        return {0.25 * v[0] + 0.15 * std::sin(v[1]) + 0.5,
                0.25 * v[1] + 0.15 * std::cos(v[0]) - 0.3};
    };
    Operator::Init init;
    init.id = "nonlin-2d";
    init.dimension = 2;
    init.map = map;
    init.contract_a = 0.4;
    init.norm = NormKind::Sup;
    init.declared = Condition::Banach;
    init.fixed_point_candidates = {picard_refine(map, {0.0, 0.0}, 300)};
    return Operator(std::move(init));
}

std::vector<Operator> build_corpus() {
    std::vector<Operator> ops;

    {
        Operator::Init init;
        init.id = "halving-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {0.5 * v[0]}; };
        init.contract_a = 0.5;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    {
        Operator::Init init;
        init.id = "affine-1d-shift";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {0.5 * (v[0] + 1.0)}; };
        init.contract_a = 0.5;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{1.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    {
        // Negative slope: iterates oscillate around the fixed point 7/13.
        Operator::Init init;
        init.id = "scaled-1d-neg";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {-0.3 * v[0] + 0.7}; };
        init.contract_a = 0.3;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{0.7 / 1.3}};
        ops.emplace_back(std::move(init));
    }
    {
        // u/(1+|u|) is 1-Lipschitz, so the total Lipschitz constant is 0.7.
        Operator::Init init;
        init.id = "damped-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec {
            return {0.5 * v[0] + 0.2 * v[0] / (1.0 + std::abs(v[0]))};
        };
        init.contract_a = 0.7;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    {
        Operator::Init init;
        init.id = "tanh-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {0.3 * v[0] + 0.1 * std::tanh(v[0])}; };
        init.contract_a = 0.4;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    {
        // Discontinuous at 1; no Banach constant exists (pairs straddling the
        // jump have unbounded ratio), but the displacement term L·d(x,Tx)
        // with L = 0.25 covers the jump.
        Operator::Init init;
        init.id = "step-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {v[0] < 1.0 ? 0.0 : 0.2}; };
        init.contract_a = 0.4;
        init.contract_L = 0.25;
        init.phi = Phi::linear(0.25);
        init.declared = Condition::Osilike;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    {
        // Jump of 0.3 at x = 2 on top of a 0.3-contraction; φ = linear(0.3)
        // absorbs the jump through the displacement 0.7|x|.
        Operator::Init init;
        init.id = "jump-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec {
            return {0.3 * v[0] + (v[0] >= 2.0 ? 0.3 : 0.0)};
        };
        init.contract_a = 0.5;
        init.contract_L = 0.3;
        init.phi = Phi::linear(0.3);
        init.declared = Condition::ImoruOlatinwo;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    ops.push_back(make_affine_2d());
    ops.push_back(make_nonlin_2d());
    ops.push_back(make_rotation_3d());
    {
        Operator::Init init;
        init.id = "diag-3d";
        init.dimension = 3;
        init.map = [](const Vec& v) -> Vec {
            return {0.6 * v[0] + 1.0, -0.25 * v[1] + 2.0, 0.1 * v[2] - 1.0};
        };
        init.contract_a = 0.6;
        init.norm = NormKind::Sup;
        init.declared = Condition::Banach;
        init.fixed_point_candidates = {{1.0 / 0.4, 2.0 / 1.25, -1.0 / 0.9}};
        ops.emplace_back(std::move(init));
    }
    {
        // Expanding map; kept for divergence paths. contract_a has no meaning
        // for class none.
        Operator::Init init;
        init.id = "doubling-1d";
        init.dimension = 1;
        init.map = [](const Vec& v) -> Vec { return {2.0 * v[0]}; };
        init.contract_a = 0.0;
        init.declared = Condition::None;
        init.fixed_point_candidates = {{0.0}};
        init.monotone_1d = true;
        ops.emplace_back(std::move(init));
    }
    return ops;
}

} // namespace

const std::vector<Operator>& corpus() {
    static const std::vector<Operator> ops = build_corpus();
    return ops;
}

const Operator& corpus_get(const std::string& id) {
    for (const auto& op : corpus())
        if (op.id() == id) return op;
    throw ValidationError("unknown operator id: '" + id + "' (see check-operator --list)");
}

std::vector<std::string> corpus_ids() {
    std::vector<std::string> ids;
    for (const auto& op : corpus()) ids.push_back(op.id());
    return ids;
}

std::string corpus_table_csv() {
    std::ostringstream os;
    os << "id,dimension,class,a,L,phi,norm,q\n";
    for (const auto& op : corpus()) {
        os << op.id() << ',' << op.dimension() << ',' << to_string(op.declared()) << ','
           << format_double(op.contract_a()) << ',' << format_double(op.contract_L()) << ','
           << op.phi().to_string() << ',' << to_string(op.norm_kind()) << ',';
        if (op.has_fixed_point()) {
            const Vec& q = op.fixed_point();
            os << '"';
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (i) os << ' ';
                os << format_double(q[i]);
            }
            os << '"';
        }
        os << '\n';
    }
    return os.str();
}

} // namespace kirkfp

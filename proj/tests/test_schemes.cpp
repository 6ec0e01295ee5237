#include <doctest.h>

#include <cmath>

#include "kirkfp/analysis.hpp"
#include "kirkfp/corpus.hpp"
#include "kirkfp/scheme.hpp"
#include "testutil.hpp"

using namespace kirkfp;

namespace {

const Operator& halving() { return corpus_get("halving-1d"); }

SchemeConfig kirk2(std::vector<int> powers, std::vector<double> alpha, std::vector<double> beta) {
    SchemeConfig cfg;
    cfg.family = Family::KirkMultistep;
    cfg.k = 2;
    cfg.powers = std::move(powers);
    cfg.alpha = WeightSchedule::constant(std::move(alpha));
    cfg.betas = {WeightSchedule::constant(std::move(beta))};
    cfg.validate();
    return cfg;
}

SchemeConfig multistep_cfg(Family family, std::vector<double> thetas) {
    SchemeConfig cfg;
    cfg.family = family;
    cfg.k = static_cast<int>(thetas.size());
    cfg.powers.assign(thetas.size(), 1);
    cfg.alpha = WeightSchedule::constant(WeightRow::two_point(thetas[0]));
    for (std::size_t i = 1; i < thetas.size(); ++i)
        cfg.betas.push_back(WeightSchedule::constant(WeightRow::two_point(thetas[i])));
    cfg.validate();
    return cfg;
}

} // namespace

TEST_CASE("weight row validation names the broken invariant") {
    CHECK_THROWS_WITH_AS(WeightRow({0.5, 0.4}).validate(),
                         doctest::Contains("sum to 1"), ValidationError);
    CHECK_THROWS_WITH_AS(WeightRow({1.5, -0.5}).validate(),
                         doctest::Contains("[0, 1]"), ValidationError);
    CHECK_NOTHROW(WeightRow({0.5, 0.25, 0.25}).validate());
}

TEST_CASE("tabulated schedules clamp to their last row") {
    auto sched = WeightSchedule::tabulated({WeightRow::two_point(0.1), WeightRow::two_point(0.9)});
    CHECK(sched.row_at(0).w[1] == 0.1);
    CHECK(sched.row_at(1).w[1] == 0.9);
    CHECK(sched.row_at(100).w[1] == 0.9);
}

TEST_CASE("generated schedules produce valid two-point rows") {
    auto h = WeightSchedule::harmonic();
    CHECK(h.row_at(0).w[1] == 0.5);
    CHECK(h.row_at(8).w[1] == 0.1);
    auto g = WeightSchedule::geometric(0.8, 0.5);
    CHECK(g.row_at(0).w[1] == 0.8);
    CHECK(g.row_at(2).w[1] == 0.2);
    for (int n : {0, 1, 5, 50}) {
        CHECK_NOTHROW(h.row_at(n).validate());
        CHECK_NOTHROW(g.row_at(n).validate());
    }
    CHECK_THROWS_AS(WeightSchedule::geometric(1.2, 0.5), ValidationError);
}

TEST_CASE("scheme config validation") {
    SchemeConfig cfg = kirk2({1, 1}, {0.5, 0.5}, {0.5, 0.5});

    SUBCASE("depth") {
        cfg.k = 1;
        cfg.powers = {1};
        cfg.betas.clear();
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("at least 2"), ValidationError);
    }
    SUBCASE("kirk-sp depth is pinned") {
        cfg.family = Family::KirkSp;
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("fixed at 3"), ValidationError);
    }
    SUBCASE("powers must be non-increasing") {
        cfg.powers = {1, 2};
        cfg.betas = {WeightSchedule::constant({1.0 / 3, 1.0 / 3, 1.0 / 3})};
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("non-increasing"), ValidationError);
    }
    SUBCASE("row length must match the level's cap") {
        cfg.powers = {2, 1};
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("s+1"), ValidationError);
    }
    SUBCASE("anchor enforcement") {
        cfg.alpha = WeightSchedule::constant({0.0, 1.0});
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("anchor"), ValidationError);
        cfg.enforce_anchor_nonzero = false;
        CHECK_NOTHROW(cfg.validate());
    }
    SUBCASE("multistep families demand unit powers") {
        cfg.family = Family::Multistep;
        cfg.powers = {2, 1};
        cfg.alpha = WeightSchedule::constant({0.4, 0.3, 0.3});
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("power 1"), ValidationError);
    }
}

TEST_CASE("kirk multistep step: hand-evaluated values") {
    // k=2, s=(1,1), both rows (0.5, 0.5), halving map from x=1:
    // y1 = 0.5*1 + 0.5*0.5 = 0.75; x' = 0.5*1 + 0.5*(0.75/2) = 0.6875
    SchemeConfig cfg = kirk2({1, 1}, {0.5, 0.5}, {0.5, 0.5});
    Vec out = kirk_multistep_step(halving(), cfg, {1.0}, 0);
    CHECK(out[0] == doctest::Approx(0.6875).epsilon(1e-15));

    // s2 = 0 collapses the inner level to y1 = x: x' = 0.5 + 0.5*0.5 = 0.75
    SchemeConfig km = kirk2({1, 0}, {0.5, 0.5}, {1.0});
    CHECK(kirk_multistep_step(halving(), km, {1.0}, 0)[0] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("kirk sp step: hand-evaluated values") {
    SchemeConfig cfg;
    cfg.family = Family::KirkSp;
    cfg.k = 3;
    cfg.powers = {1, 1, 1};
    cfg.alpha = WeightSchedule::constant({0.5, 0.5});
    cfg.betas = {WeightSchedule::constant({0.5, 0.5}), WeightSchedule::constant({0.5, 0.5})};
    cfg.validate();
    // each level multiplies by 0.75 on the halving map: 0.75^3 = 0.421875
    CHECK(kirk_sp_step(halving(), cfg, {1.0}, 0)[0] == doctest::Approx(0.421875).epsilon(1e-15));

    // all rows (1.0), s=(0,0,0): the identity scheme
    SchemeConfig ident;
    ident.family = Family::KirkSp;
    ident.k = 3;
    ident.powers = {0, 0, 0};
    ident.alpha = WeightSchedule::constant({1.0});
    ident.betas = {WeightSchedule::constant({1.0}), WeightSchedule::constant({1.0})};
    ident.validate();
    CHECK(kirk_sp_step(halving(), ident, {0.37}, 0)[0] == 0.37);
}

TEST_CASE("multistep step: mann and noor reductions") {
    // k=2 with beta=0 is the mann update (1-a)x + aTx
    SchemeConfig mann_like = multistep_cfg(Family::Multistep, {0.5, 0.0});
    CHECK(multistep_step(halving(), mann_like, {1.0}, 0)[0] == doctest::Approx(0.75).epsilon(1e-15));

    // k=3 with all thetas 1 from x=1: y2=0.5, y1=0.25, x'=0.125
    SchemeConfig noor_like = multistep_cfg(Family::Multistep, {1.0, 1.0, 1.0});
    CHECK(multistep_step(halving(), noor_like, {1.0}, 0)[0] == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("multistep-sp step matches the three-level kirk-sp with unit powers") {
    SchemeConfig alt = multistep_cfg(Family::MultistepSp, {0.5, 0.5, 0.5});
    CHECK(multistep_sp_step(halving(), alt, {1.0}, 0)[0] ==
          doctest::Approx(0.421875).epsilon(1e-15));
}

TEST_CASE("fixed-point invariance for every family") {
    Rng rng(55);
    for (const Operator* op : testutil::contractive_corpus()) {
        const Vec& q = op->fixed_point();
        for (int trial = 0; trial < 10; ++trial) {
            SchemeConfig cfg = testutil::random_kirk_config(rng);
            Vec out = scheme_step(*op, cfg, q, 0);
            INFO(op->id(), " ", to_string(cfg.family));
            CHECK(op->distance(out, q) <= 1e-12 * (1.0 + norm(op->norm_kind(), q)));
        }
        for (Family fam : {Family::Multistep, Family::MultistepSp}) {
            SchemeConfig cfg = multistep_cfg(fam, {rng.uniform(), rng.uniform(), rng.uniform()});
            Vec out = scheme_step(*op, cfg, q, 0);
            CHECK(op->distance(out, q) <= 1e-12 * (1.0 + norm(op->norm_kind(), q)));
        }
    }
}

TEST_CASE("classic constructors reproduce their schemes") {
    SUBCASE("picard is pure application") {
        SchemeConfig p = picard();
        CHECK(!p.warnings.empty());
        CHECK(scheme_step(halving(), p, {1.0}, 0)[0] == 0.5);
    }
    SUBCASE("krasnoselskij(1) with enforcement is rejected") {
        CHECK_THROWS_WITH_AS(krasnoselskij(1.0), doctest::Contains("anchor"), ValidationError);
        CHECK_NOTHROW(krasnoselskij(1.0, false));
        CHECK_NOTHROW(krasnoselskij(0.7));
    }
    SUBCASE("mann equals the multistep engine with beta = 0") {
        SchemeConfig m = mann(WeightSchedule::constant(WeightRow::two_point(0.5)));
        SchemeConfig ref = multistep_cfg(Family::Multistep, {0.5, 0.0});
        Vec x{1.0};
        for (int n = 0; n < 50; ++n) {
            Vec a = scheme_step(halving(), m, x, n);
            Vec b = scheme_step(halving(), ref, x, n);
            CHECK(std::abs(a[0] - b[0]) <= 1e-12);
            x = a;
        }
        CHECK(scheme_step(halving(), m, {1.0}, 0)[0] == doctest::Approx(0.75).epsilon(1e-15));
    }
    SUBCASE("kirk-mann shape") {
        SchemeConfig km = kirk_mann(WeightSchedule::constant({0.4, 0.3, 0.3}), 2);
        CHECK(km.k == 2);
        CHECK(km.powers == std::vector<int>{2, 0});
    }
    SUBCASE("thianwan runs through the sp engine") {
        SchemeConfig t = thianwan(WeightSchedule::constant(WeightRow::two_point(0.5)),
                                  WeightSchedule::constant(WeightRow::two_point(0.5)));
        // y1 = 0.75, x' = 0.5*0.75 + 0.5*0.375 = 0.5625
        CHECK(scheme_step(halving(), t, {1.0}, 0)[0] == doctest::Approx(0.5625).epsilon(1e-15));
    }
}

TEST_CASE("unit-power kirk engines reproduce the classic engines") {
    Rng rng(66);
    for (const Operator* op : testutil::contractive_corpus()) {
        Vec x0 = testutil::offset_from_fixed_point(*op, 2.0);

        // random tabulated two-point schedules shared by both engines
        int k = rng.uniform_int(2, 4);
        std::vector<std::vector<WeightRow>> tables(static_cast<std::size_t>(k));
        for (auto& t : tables)
            for (int n = 0; n < 40; ++n) t.push_back(WeightRow::two_point(rng.uniform(0.0, 0.98)));

        SchemeConfig kirk_cfg, classic;
        kirk_cfg.family = Family::KirkMultistep;
        classic.family = Family::Multistep;
        kirk_cfg.k = classic.k = k;
        kirk_cfg.powers.assign(static_cast<std::size_t>(k), 1);
        classic.powers = kirk_cfg.powers;
        kirk_cfg.alpha = classic.alpha = WeightSchedule::tabulated(tables[0]);
        for (int level = 1; level < k; ++level) {
            kirk_cfg.betas.push_back(WeightSchedule::tabulated(tables[static_cast<std::size_t>(level)]));
            classic.betas.push_back(WeightSchedule::tabulated(tables[static_cast<std::size_t>(level)]));
        }
        kirk_cfg.validate();
        classic.validate();

        Vec xk = x0, xc = x0;
        for (int n = 0; n < 60; ++n) {
            xk = scheme_step(*op, kirk_cfg, xk, n);
            xc = scheme_step(*op, classic, xc, n);
            INFO(op->id(), " step ", n);
            REQUIRE(op->distance(xk, xc) <= 1e-12);
        }
    }
}

TEST_CASE("run: geometric convergence on the kirk-mann example") {
    SchemeConfig km = kirk2({1, 0}, {0.5, 0.5}, {1.0});
    IterationTrace trace = run(halving(), km, {1.0}, 1e-10, 500);
    CHECK(trace.stop_reason == StopReason::ToleranceMet);
    CHECK(trace.errors.back() <= 1e-10);
    // x' = 0.75 x exactly on the halving map
    for (std::size_t n = 0; n + 1 < trace.errors.size(); ++n)
        CHECK(trace.errors[n + 1] == doctest::Approx(0.75 * trace.errors[n]).epsilon(1e-12));
    CHECK(trace.errors.size() == trace.points.size());
}

TEST_CASE("run: immediate stop at the fixed point") {
    SchemeConfig km = kirk2({1, 0}, {0.5, 0.5}, {1.0});
    IterationTrace trace = run(halving(), km, {0.0}, 1e-10, 500);
    CHECK(trace.stop_reason == StopReason::ToleranceMet);
    CHECK(trace.iterations == 0);
}

TEST_CASE("run: the doubling map diverges under picard") {
    IterationTrace trace = run(corpus_get("doubling-1d"), picard(), {1.0}, 1e-10, 10000);
    CHECK(trace.stop_reason == StopReason::Diverged);
}

TEST_CASE("run: invalid config fails before any stepping") {
    SchemeConfig bad = kirk2({1, 1}, {0.5, 0.5}, {0.5, 0.5});
    bad.powers = {1, 2};
    CHECK_THROWS_AS(run(halving(), bad, {1.0}, 1e-8, 10), ValidationError);
    SchemeConfig ok = kirk2({1, 1}, {0.5, 0.5}, {0.5, 0.5});
    CHECK_THROWS_AS(run(halving(), ok, {1.0}, 0.0, 10), ValidationError);
    CHECK_THROWS_AS(run(halving(), ok, {1.0}, 1e-8, 0), ValidationError);
    CHECK_THROWS_AS(run(halving(), ok, {1.0, 2.0}, 1e-8, 10), ValidationError);
}

TEST_CASE("run: successive-difference mode works without a known fixed point") {
    Operator::Init init;
    init.id = "anon-halving";
    init.dimension = 1;
    init.map = [](const Vec& v) -> Vec { return {0.5 * v[0]}; };
    init.contract_a = 0.5;
    Operator T(std::move(init));
    CHECK_THROWS_AS(run(T, picard(), {1.0}, 1e-8, 100, StopMode::TrueError), ValidationError);
    IterationTrace trace = run(T, picard(), {1.0}, 1e-8, 100);
    CHECK(trace.mode == StopMode::SuccessiveDiff);
    CHECK(trace.stop_reason == StopReason::ToleranceMet);
    CHECK(trace.errors.empty());
}

TEST_CASE("run is deterministic") {
    SchemeConfig cfg = kirk2({2, 1}, {0.3, 0.4, 0.3}, {0.6, 0.4});
    IterationTrace a = run(corpus_get("nonlin-2d"), cfg, {5.0, -3.0}, 1e-12, 200);
    IterationTrace b = run(corpus_get("nonlin-2d"), cfg, {5.0, -3.0}, 1e-12, 200);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
}

TEST_CASE("iterates of monotone 1-d operators stay between x0 and q") {
    Rng rng(91);
    for (const Operator* op : testutil::contractive_corpus()) {
        if (!op->monotone_1d()) continue;
        const double q = op->fixed_point()[0];
        for (double x0 : {q + 4.0, q - 4.0}) {
            SchemeConfig cfg = testutil::random_kirk_config(rng);
            IterationTrace trace = run(*op, cfg, {x0}, 1e-10, 300);
            double lo = std::min(x0, q) - 1e-12, hi = std::max(x0, q) + 1e-12;
            for (const Vec& p : trace.points) {
                INFO(op->id());
                CHECK(p[0] >= lo);
                CHECK(p[0] <= hi);
            }
        }
    }
}

TEST_CASE("per-step error contraction by sigma along corpus runs") {
    Rng rng(92);
    for (const Operator* op : testutil::contractive_corpus()) {
        for (int trial = 0; trial < 5; ++trial) {
            testutil::ConfigGen gen;
            gen.anchor_max = 0.9;
            SchemeConfig cfg = testutil::random_kirk_config(rng, gen);
            Vec x0 = testutil::offset_from_fixed_point(*op, 3.0);
            IterationTrace trace = run(*op, cfg, x0, 1e-9, 2000);
            for (std::size_t n = 0; n + 1 < trace.errors.size(); ++n) {
                double sig = contraction_factor(cfg, op->contract_a(), static_cast<int>(n)).sigma;
                INFO(op->id(), " step ", n);
                REQUIRE(trace.errors[n + 1] <= sig * trace.errors[n] + 1e-10);
            }
        }
    }
}

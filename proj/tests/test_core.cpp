#include <doctest.h>

#include <cstdlib>

#include "kirkfp/format.hpp"
#include "kirkfp/phi.hpp"
#include "kirkfp/rng.hpp"
#include "kirkfp/vec.hpp"

using namespace kirkfp;

TEST_CASE("norm axioms hold on sampled vectors") {
    Rng rng(11);
    for (NormKind k : {NormKind::Euclidean, NormKind::Sup, NormKind::L1}) {
        for (int trial = 0; trial < 200; ++trial) {
            int d = rng.uniform_int(1, 5);
            Vec a(d), b(d);
            for (auto& x : a) x = rng.uniform(-10, 10);
            for (auto& x : b) x = rng.uniform(-10, 10);

            CHECK(norm(k, a) >= 0.0);
            // triangle inequality
            CHECK(norm(k, add(a, b)) <= norm(k, a) + norm(k, b) + 1e-12);
            // absolute homogeneity
            double c = rng.uniform(-5, 5);
            CHECK(norm(k, scaled(c, a)) == doctest::Approx(std::abs(c) * norm(k, a)).epsilon(1e-12));
        }
        CHECK(norm(k, Vec{0.0, 0.0}) == 0.0);
        CHECK(norm(k, Vec{0.0, 1e-150}) > 0.0);
    }
}

TEST_CASE("vector ops reject mismatched dimensions") {
    CHECK_THROWS_AS(add(Vec{1.0}, Vec{1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(distance(NormKind::Euclidean, Vec{1.0}, Vec{1.0, 2.0}), ValidationError);
}

TEST_CASE("rng is deterministic per seed") {
    Rng a(42), b(42), c(43);
    bool same = true, diff = false;
    for (int i = 0; i < 100; ++i) {
        double x = a.uniform();
        same = same && x == b.uniform();
        diff = diff || x != c.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(same);
    CHECK(diff);
}

TEST_CASE("pair sampler stays inside its box") {
    PairSampler s(3, 10.0, 7);
    for (int i = 0; i < 100; ++i) {
        auto [x, y] = s.next();
        REQUIRE(x.size() == 3);
        for (double c : x) CHECK(std::abs(c) <= 10.0);
        for (double c : y) CHECK(std::abs(c) <= 10.0);
    }
}

TEST_CASE("phi kinds evaluate and compose") {
    CHECK(Phi::zero()(3.7) == 0.0);
    CHECK(Phi::linear(0.25)(4.0) == 1.0);
    CHECK(Phi::saturating(2.0)(1.0) == doctest::Approx(1.0));
    CHECK(Phi::linear(0.5).compose(8.0, 3) == 1.0);
    CHECK(Phi::linear(0.5).compose(8.0, 0) == 8.0);
    CHECK_THROWS_AS(Phi::linear(-0.1), ValidationError);
}

TEST_CASE("phi axioms: zero and linear clean, saturating warns below L=1") {
    for (const Phi& phi : {Phi::zero(), Phi::linear(0.7), Phi::linear(3.0)}) {
        auto rep = check_phi_axioms(phi, 5, 2000);
        CHECK(rep.ok());
        CHECK(rep.warnings.empty());
    }
    auto rep = check_phi_axioms(Phi::saturating(1.5), 5, 2000);
    CHECK(rep.ok()); // no violations: scaling holds for L >= 1
    CHECK(!rep.warnings.empty());
    for (const auto& w : rep.warnings) {
        CHECK(w.axiom == "scaling");
        CHECK(w.v < 1.0); // the sampled L
    }
}

TEST_CASE("phi parses its own display form") {
    CHECK(Phi::parse("zero").kind() == Phi::Kind::Zero);
    CHECK(Phi::parse("linear(0.25)").coeff() == 0.25);
    CHECK(Phi::parse(Phi::saturating(0.3).to_string()).coeff() == 0.3);
    CHECK_THROWS_AS(Phi::parse("cubic(2)"), ValidationError);
}

TEST_CASE("format_double round-trips and is shortest") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.75) == "0.75");
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        double x = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12, 12));
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "spinchain/coherence.hpp"

using namespace spinchain;

TEST_CASE("mode factor limits") {
    ChainParams p{5, 1.0, 1.0, 0.05};
    ModeData m1 = mode_data(p, 1.075, 1);
    ModeData m2 = mode_data(p, 0.925, 1);
    CHECK(mode_factor(m1, m2, 0.0) == 1.0);
    CHECK(mode_factor(m1, m1, 7.3) == doctest::Approx(1.0).epsilon(1e-14));
    ModeData other_k = mode_data(p, 0.925, 2);
    CHECK_THROWS_AS(mode_factor(m1, other_k, 1.0), std::invalid_argument);
    // gamma = 0, both eps same sign: phase-only evolution
    ChainParams xx{5, 0.0, 1.0, 0.05};
    CHECK(mode_factor(mode_data(xx, 1.5, 1), mode_data(xx, 1.3, 1), 4.2) ==
          doctest::Approx(1.0).epsilon(1e-14));
    for (double t : {0.3, 1.7, 12.9})
        CHECK(mode_factor(m1, m2, t) <= 1.0);
}

TEST_CASE("coherence factor identities") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ul(-2.0, 3.0), ug(-0.5, 0.5), ugam(-1.5, 1.5),
        ut(0.0, 100.0);
    std::uniform_int_distribution<int> un(1, 100), uj(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        ChainParams p{2 * un(rng) + 1, ugam(rng), ul(rng), ug(rng)};
        PairSelector pair{uj(rng), uj(rng)};
        double t = ut(rng);
        CHECK(coherence_factor(p, pair, 0.0) == 1.0);
        double f = coherence_factor(p, pair, t);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        ChainParams xx = p;
        xx.gamma = 0.0;
        CHECK(coherence_factor(xx, pair, t) == doctest::Approx(1.0).epsilon(1e-12));
        ChainParams decoupled = p;
        decoupled.g = 0.0;
        CHECK(coherence_factor(decoupled, pair, t) == 1.0);
        CHECK(coherence_factor(p, {pair.j_prime, pair.j}, t) ==
              doctest::Approx(f).epsilon(1e-12));
    }
    // equal dressed fields: identically 1
    ChainParams p{21, 1.0, 1.0, 0.1};
    for (double t : {0.0, 3.0, 17.5, 60.0}) {
        CHECK(coherence_factor(p, {3, 4}, t) == 1.0);
        CHECK(coherence_factor(p, {4, 5}, t) == 1.0);
        CHECK(coherence_factor(p, {6, 8}, t) == 1.0);
        CHECK(coherence_factor(p, {1, 1}, t) == 1.0);
    }
}

TEST_CASE("frozen regression values, gamma=1 lambda=1 g=0.05 pair 1,2") {
    auto f = [](int n, double t) {
        return coherence_factor({n, 1.0, 1.0, 0.05}, {1, 2}, t);
    };
    CHECK(f(5, 1) == doctest::Approx(0.9809077836098534).epsilon(1e-12));
    CHECK(f(5, 10) == doctest::Approx(0.6052578099352057).epsilon(1e-12));
    CHECK(f(5, 50) == doctest::Approx(0.8418760056652719).epsilon(1e-12));
    CHECK(f(11, 10) == doctest::Approx(0.2813309925176166).epsilon(1e-12));
    CHECK(f(21, 10) == doctest::Approx(0.10571856866968254).epsilon(1e-12));
    CHECK(f(41, 10) == doctest::Approx(0.011547518412438694).epsilon(1e-12));
    CHECK(f(101, 10) == doctest::Approx(1.0221744950127724e-05).epsilon(1e-12));
    CHECK(f(101, 100) == doctest::Approx(4.318331149919896e-05).epsilon(1e-12));
}

TEST_CASE("series validation and grid evaluators") {
    ChainParams p{11, 1.0, 1.0, 0.05};
    auto s = coherence_series(p, {1, 2}, {0.0, 1.0, 2.0});
    CHECK(s.values.size() == 3);
    CHECK(s.values[0] == 1.0);
    CHECK_THROWS_AS(coherence_series(p, {1, 2}, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(coherence_series(p, {1, 2}, {-1.0, 0.5}), std::invalid_argument);

    ChainParams xx = p;
    xx.gamma = 0.0;
    for (double v : coherence_series(xx, {1, 2}, {0, 5, 10}).values)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // OpenMP evaluators match the serial reference bit for bit
    std::vector<double> times;
    for (int i = 0; i <= 400; ++i) times.push_back(0.25 * i);
    ChainParams big{401, 1.0, 0.98, 0.05};
    CHECK(coherence_values(big, {1, 2}, times) ==
          coherence_values_serial(big, {1, 2}, times));
    auto par = sweep(p, {1, 2}, SweepAxis::lambda, {0.5, 1.0, 1.5}, times);
    auto ser = sweep_serial(p, {1, 2}, SweepAxis::lambda, {0.5, 1.0, 1.5}, times);
    CHECK(par.values == ser.values);
}

TEST_CASE("sweep shapes and edge cases") {
    ChainParams p{11, 1.0, 1.0, 0.05};
    auto g = sweep(p, {1, 2}, SweepAxis::lambda, {1.0}, {0.0});
    CHECK(g.values == std::vector<double>{1.0});
    CHECK_THROWS_AS(sweep(p, {1, 2}, SweepAxis::lambda, {}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(p, {1, 2}, SweepAxis::gamma, {1.0}, {}), std::invalid_argument);
    auto grid = sweep(p, {1, 2}, SweepAxis::gamma, {0.0, 1.0}, {0.0, 2.0, 4.0});
    CHECK(grid.values.size() == 6);
    CHECK(grid.at(0, 2) == doctest::Approx(1.0).epsilon(1e-12));  // gamma = 0 row
    for (double v : grid.values) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("size scan") {
    ChainParams base{101, 1.0, 1.0, 0.05};
    auto scans = size_scan(base, {1, 2}, {5, 11}, {0.0, 10.0});
    CHECK(scans.size() == 2);
    CHECK(scans[0].params.n_sites == 5);
    CHECK(scans[0].values[0] == 1.0);
    CHECK(scans[0].values[1] == doctest::Approx(0.6052578099352057).epsilon(1e-12));
    CHECK(scans[1].values[1] == doctest::Approx(0.2813309925176166).epsilon(1e-12));
    CHECK_THROWS_AS(size_scan(base, {1, 2}, {6}, {0.0}), std::invalid_argument);
}

TEST_CASE("scaling transformation arithmetic") {
    ChainParams p{101, 1.0, 0.9, 0.05};
    SUBCASE("m=1 is the identity") {
        auto [q, t] = apply_scaling(p, 5.0, {1.0, ScalingMode::scale_n});
        CHECK(q.n_sites == p.n_sites);
        CHECK(q.lambda == p.lambda);
        CHECK(q.g == p.g);
        CHECK(q.gamma == p.gamma);
        CHECK(t == 5.0);
        CHECK(scaling_residual(p, {1, 2}, {1.0, ScalingMode::scale_n},
                               {0.0, 1.0, 2.0, 3.0}) == 0.0);
        CHECK(scaling_residual(p, {1, 2}, {1.0, ScalingMode::scale_gamma},
                               {0.0, 1.0, 2.0, 3.0}) == 0.0);
    }
    SUBCASE("m=4 chain-size reading") {
        auto [q, t] = apply_scaling(p, 5.0, {4.0, ScalingMode::scale_n});
        CHECK(q.n_sites == 405);  // nearest odd to 404, ties up
        CHECK(q.lambda == doctest::Approx(0.975).epsilon(1e-15));
        CHECK(q.g == doctest::Approx(0.0125).epsilon(1e-15));
        CHECK(q.gamma == 1.0);
        CHECK(t == 20.0);
    }
    SUBCASE("m=4 anisotropy reading") {
        auto [q, t] = apply_scaling(p, 5.0, {4.0, ScalingMode::scale_gamma});
        CHECK(q.n_sites == 101);
        CHECK(q.gamma == 0.25);
        CHECK(t == 20.0);
    }
    CHECK_THROWS_AS(apply_scaling(p, 1.0, {0.0, ScalingMode::scale_n}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_scaling(p, 1.0, {-2.0, ScalingMode::scale_n}),
                    std::invalid_argument);
}

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "diffusion/engine.hpp"
#include "diffusion/errors.hpp"
#include "test_support.hpp"

using namespace diffusion;

namespace {

// P_5 drawn left to right as v5..v1; vertex 0 is v5.
const Graph kP5 = Graph::path(5);
const Configuration kPathStart{0, 2, 0, 4, 1};

std::vector<Stack> sorted(std::vector<Stack> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("fire reproduces the initial firing on P5") {
    CHECK(fire(kP5, kPathStart) == Configuration{1, 0, 2, 2, 2});
}

TEST_CASE("fire leaves constant configurations alone") {
    CHECK(fire(Graph::complete(6), Configuration{4, 4, 4, 4, 4, 4}) == Configuration{4, 4, 4, 4, 4, 4});
    CHECK(fire(Graph::cycle(5), Configuration{-2, -2, -2, -2, -2}) == Configuration{-2, -2, -2, -2, -2});
}

TEST_CASE("fire on K5 with {3,4,4,5,5}") {
    const auto next = fire(Graph::complete(5), Configuration{3, 4, 4, 5, 5});
    CHECK(next == Configuration{7, 5, 5, 2, 2});
    CHECK(fire_complete(std::vector<Stack>{3, 4, 4, 5, 5}) == std::vector<Stack>{2, 2, 5, 5, 7});
}

TEST_CASE("fire rejects size mismatch and can go into debt") {
    CHECK_THROWS_AS(fire(kP5, Configuration{1, 2, 3}), SizeMismatch);
    // A vertex with 2 chips and three empty neighbours ends at -1.
    CHECK(fire(Graph::star(4), Configuration{2, 0, 0, 0}) == Configuration{-1, 1, 1, 1});
}

TEST_CASE("fire reports overflow instead of wrapping") {
    const Stack big = std::numeric_limits<Stack>::max();
    const Stack small = std::numeric_limits<Stack>::min();
    // The centre sits one above three minimal leaves and loses three chips.
    CHECK_THROWS_AS(fire(Graph::star(4), Configuration{small + 1, small, small, small}), OverflowError);
    CHECK_THROWS_AS(Configuration{big}.shifted(1), OverflowError);
}

TEST_CASE("fire_complete on multisets") {
    // {0^2, 4^5} -> {2^5, 5^2}
    CHECK(fire_complete(std::vector<Stack>{0, 0, 4, 4, 4, 4, 4}) == std::vector<Stack>{2, 2, 2, 2, 2, 5, 5});
    CHECK(fire_complete(std::vector<Stack>{0, 0, 0}) == std::vector<Stack>{0, 0, 0});
    CHECK(fire_complete(std::vector<Stack>{0, 1, 2}) == std::vector<Stack>{0, 1, 2});
    CHECK(fire_complete(std::vector<Stack>{2, 0, 1}) == std::vector<Stack>{0, 1, 2});
    CHECK_THROWS_AS(fire_complete(std::vector<Stack>{}), InputError);
}

TEST_CASE("fire_complete agrees with fire on labelled K_n") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 10;
        auto c = testing_support::random_config(n, -6, 6, rng);
        const auto labelled = fire(Graph::complete(n), c);
        auto stacks = std::vector<Stack>(c.begin(), c.end());
        std::shuffle(stacks.begin(), stacks.end(), rng);
        CHECK(fire_complete(stacks) == sorted({labelled.begin(), labelled.end()}));
    }
}

TEST_CASE("fire matches a vertex-by-vertex reference on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = testing_support::random_graph(1 + trial % 12, rng);
        const auto c = testing_support::random_config(g.vertex_count(), -10, 10, rng);
        const std::vector<Stack> raw(c.begin(), c.end());
        CHECK(fire(g, c) == Configuration(testing_support::naive_fire(g, raw)));
    }
}

TEST_CASE("conservation and shift equivariance") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Stack> shift(-1000, 1000);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = testing_support::random_graph(1 + trial % 12, rng);
        const auto c = testing_support::random_config(g.vertex_count(), -10, 10, rng);
        const auto next = fire(g, c);
        CHECK(next.total() == c.total());
        const Stack k = shift(rng);
        CHECK(fire(g, c.shifted(k)) == next.shifted(k));
    }
}

TEST_CASE("orientation_of") {
    SUBCASE("P5 with stacks (15,9,8,2,12), vertex 0 = v1") {
        const auto o = orientation_of(kP5, Configuration{15, 9, 8, 2, 12});
        const std::vector<std::pair<Vertex, Vertex>> expected{{0, 1}, {1, 2}, {2, 3}, {4, 3}};
        CHECK(o.directed_edges() == expected);
        CHECK(o.flat_count() == 0);
    }
    SUBCASE("constant configuration is all flat") {
        const auto o = orientation_of(Graph::complete(4), Configuration{1, 1, 1, 1});
        CHECK(o.flat_count() == 6);
        CHECK(o.directed_edges().empty());
    }
    SUBCASE("K3 with distinct values") {
        const auto o = orientation_of(Graph::complete(3), Configuration{0, 1, 2});
        CHECK(o.flat_count() == 0);
        CHECK(o.size() == 3);
        CHECK(o.state(0) == EdgeState::Backward);  // edge (0,1): 1 is richer
    }
    CHECK_THROWS_AS(orientation_of(kP5, Configuration{1}), SizeMismatch);
}

TEST_CASE("chips flow exactly along the induced orientation") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = testing_support::random_graph(1 + trial % 12, rng);
        const auto c = testing_support::random_config(g.vertex_count(), -5, 5, rng);
        std::vector<Stack> expected(c.begin(), c.end());
        for (const auto& [from, to] : orientation_of(g, c).directed_edges()) {
            CHECK(c[from] > c[to]);
            --expected[from];
            ++expected[to];
        }
        CHECK(fire(g, c) == Configuration(expected));
    }
}

TEST_CASE("run reproduces the P5 sequence") {
    const auto seq = run(kP5, kPathStart, 6);
    const std::vector<Configuration> expected{
        {0, 2, 0, 4, 1}, {1, 0, 2, 2, 2}, {0, 2, 1, 2, 2}, {1, 0, 3, 1, 2},
        {0, 2, 1, 3, 1}, {1, 0, 3, 1, 2}, {0, 2, 1, 3, 1},
    };
    CHECK(seq == expected);
    CHECK(run(kP5, kPathStart, 0) == std::vector<Configuration>{kPathStart});
}

TEST_CASE("run composes") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testing_support::random_graph(2 + trial % 10, rng);
        const auto c = testing_support::random_config(g.vertex_count(), -10, 10, rng);
        const std::size_t a = trial % 7, b = trial % 5;
        const auto whole = run(g, c, a + b);
        auto joined = run(g, c, a);
        const auto tail = run(g, joined.back(), b);
        joined.insert(joined.end(), tail.begin() + 1, tail.end());
        CHECK(whole == joined);
    }
}

TEST_CASE("detect_period") {
    SUBCASE("P5 sequence: preperiod 3, period 2") {
        const auto r = detect_period(kP5, kPathStart);
        CHECK(r.preperiod == 3);
        CHECK(r.period == 2);
        CHECK(r.period_configs == std::vector<Configuration>{{1, 0, 3, 1, 2}, {0, 2, 1, 3, 1}});
    }
    SUBCASE("all zero is fixed") {
        const auto r = detect_period(kP5, Configuration{0, 0, 0, 0, 0});
        CHECK(r.preperiod == 0);
        CHECK(r.period == 1);
        CHECK(r.period_configs.size() == 1);
    }
    SUBCASE("K5 {3,4,4,5,5} is already periodic") {
        const auto r = detect_period(Graph::complete(5), Configuration{3, 4, 4, 5, 5});
        CHECK(r.preperiod == 0);
        CHECK(r.period == 2);
    }
    SUBCASE("budget exhaustion is reported") {
        CHECK_THROWS_AS(detect_period(kP5, kPathStart, 2), NoRepeatWithinBudget);
        CHECK_THROWS_AS(detect_period(kP5, kPathStart, 0), InputError);
    }
}

TEST_CASE("period is 1 or 2 on random graphs") {
    std::mt19937_64 rng(2016);
    int period_two = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = testing_support::random_graph(1 + trial % 12, rng);
        const auto c = testing_support::random_config(g.vertex_count(), -10, 10, rng);
        const auto r = detect_period(g, c);
        REQUIRE((r.period == 1 || r.period == 2));
        for (std::size_t i = 0; i < r.period; ++i) {
            CHECK(fire(g, r.period_configs[i]) == r.period_configs[(i + 1) % r.period]);
        }
        CHECK(is_period_config(g, c) == (r.preperiod == 0));
        period_two += r.period == 2;
    }
    CHECK(period_two > 0);
}

TEST_CASE("normalize and equivalent") {
    CHECK(normalize(Configuration{-1, 1, -2, 1, -1}) == Configuration{1, 3, 0, 3, 1});
    CHECK(normalize(Configuration{0, 5, 2}) == Configuration{0, 5, 2});
    CHECK(normalize(Configuration{7, 7, 7}) == Configuration{0, 0, 0});

    CHECK(equivalent(Configuration{1, 0, 1, 0, 1}, Configuration{0, -1, 0, -1, 0}));
    CHECK(equivalent(Configuration{3, 1}, Configuration{3, 1}));
    CHECK_FALSE(equivalent(Configuration{0, 1}, Configuration{1, 0}));
    CHECK_THROWS_AS(equivalent(Configuration{0}, Configuration{0, 0}), SizeMismatch);

    // Two sequences on P5 that agree up to a shift from step 1 onwards.
    const auto a = run(kP5, Configuration{0, 1, 1, 1, 0}, 3);
    const auto b = run(kP5, Configuration{-1, 1, -2, 1, -1}, 3);
    CHECK(a[1] == Configuration{1, 0, 1, 0, 1});
    CHECK(b[1] == Configuration{0, -1, 0, -1, 0});
    CHECK_FALSE(equivalent(a[0], b[0]));
    for (std::size_t t = 1; t < a.size(); ++t) CHECK(equivalent(a[t], b[t]));
}

TEST_CASE("is_period_config") {
    CHECK(is_period_config(Graph::complete(10), Configuration{0, 0, 3, 3, 5, 5, 5, 5, 8, 8}));
    CHECK(is_period_config(Graph::cycle(6), Configuration{2, 2, 2, 2, 2, 2}));
    CHECK_FALSE(is_period_config(Graph::complete(2), Configuration{0, 3}));
    CHECK(is_period_config_complete(std::vector<Stack>{8, 0, 5, 3, 5, 0, 3, 5, 5, 8}));
}

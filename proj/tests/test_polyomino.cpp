#include <doctest.h>

#include <set>

#include "diffusion/errors.hpp"
#include "diffusion/polyomino.hpp"
#include "test_support.hpp"

using namespace diffusion;
using testing_support::collect;

namespace {

PolyominoError::Kind rejection(std::vector<Strip> strips) {
    try {
        validate(std::move(strips));
    } catch (const PolyominoError& e) {
        return e.kind();
    }
    FAIL("expected a PolyominoError");
    return PolyominoError::Kind::EmptyStripList;
}

}  // namespace

TEST_CASE("validate accepts board-pile encodings") {
    const auto x = validate({{0, 2}, {3, 3}, {2, 1}});
    CHECK(x.cell_count() == 6);
    CHECK(x.strip_count() == 3);
    CHECK(validate({{0, 1}, {1, 1}}).cell_count() == 2);
}

TEST_CASE("validate rejects with the violated bound") {
    try {
        validate({{0, 2}, {4, 2}});
        FAIL("expected rejection");
    } catch (const PolyominoError& e) {
        CHECK(e.kind() == PolyominoError::Kind::OffsetOutOfRange);
        CHECK(e.strip() == 1);
        CHECK(e.lower() == 1);
        CHECK(e.upper() == 3);
    }
    CHECK(rejection({}) == PolyominoError::Kind::EmptyStripList);
    CHECK(rejection({{1, 2}}) == PolyominoError::Kind::FirstOffsetNonzero);
    CHECK(rejection({{0, 2}, {0, 2}}) == PolyominoError::Kind::OffsetOutOfRange);
    CHECK(rejection({{0, 0}}) == PolyominoError::Kind::NonPositiveLength);
    CHECK(rejection({{0, 2}, {1, -1}}) == PolyominoError::Kind::NonPositiveLength);
}

TEST_CASE("compositions come out in lexicographic order") {
    std::vector<std::vector<std::int64_t>> got;
    for (auto it = CompositionRange(4).begin(); it != std::default_sentinel; ++it) got.push_back(*it);
    const std::vector<std::vector<std::int64_t>> expected{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3},
                                                          {2, 1, 1},    {2, 2},    {3, 1},    {4}};
    CHECK(got == expected);
    std::size_t count = 0;
    for (auto it = CompositionRange(10).begin(); it != std::default_sentinel; ++it) ++count;
    CHECK(count == 512);
}

TEST_CASE("enumerate_board_pile small cases") {
    const auto one = collect(enumerate_board_pile(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == validate({{0, 1}}));

    const auto two = collect(enumerate_board_pile(2));
    CHECK(two == std::vector<BoardPilePolyomino>{validate({{0, 1}, {1, 1}}), validate({{0, 2}})});

    CHECK(collect(enumerate_board_pile(3)).size() == 6);
    CHECK(collect(enumerate_board_pile(4)).size() == 19);
    CHECK_THROWS_AS(enumerate_board_pile(0), InputError);
}

TEST_CASE("enumeration order is deterministic: compositions, then offsets odometer-style") {
    const auto three = collect(enumerate_board_pile(3));
    const std::vector<BoardPilePolyomino> expected{
        validate({{0, 1}, {1, 1}, {1, 1}}), validate({{0, 1}, {1, 2}}), validate({{0, 1}, {2, 2}}),
        validate({{0, 2}, {1, 1}}),         validate({{0, 2}, {2, 1}}), validate({{0, 3}}),
    };
    CHECK(three == expected);
}

TEST_CASE("enumeration partitions by composition") {
    std::size_t total = 0;
    for (auto it = CompositionRange(7).begin(); it != std::default_sentinel; ++it) {
        for (const auto& x : collect(enumerate_board_pile_with_lengths(*it))) {
            CHECK(x.lengths() == *it);
            ++total;
        }
    }
    CHECK(total == 629);
    CHECK_THROWS_AS(enumerate_board_pile_with_lengths({}), InputError);
    CHECK_THROWS_AS(enumerate_board_pile_with_lengths({2, 0}), InputError);
}

TEST_CASE("enumeration equals the set of board-pile fixed polyominoes up to 8 cells") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<Strip>> oracle;
        for (const auto& cells : testing_support::fixed_polyominoes(n)) {
            if (testing_support::is_board_pile(cells)) oracle.insert(testing_support::encode_cells(cells));
        }
        std::set<std::vector<Strip>> seen;
        std::size_t emitted = 0;
        for (const auto& x : collect(enumerate_board_pile(n))) {
            seen.emplace(x.strips().begin(), x.strips().end());
            ++emitted;
        }
        CHECK(emitted == seen.size());
        CHECK(seen == oracle);
    }
}

TEST_CASE("layout places strips as drawn") {
    const auto placed = layout(validate({{0, 2}, {3, 3}, {2, 1}}));
    CHECK(placed == StripLayout{{0, 2}, {0, 3}, {1, 1}});
    // Two-strip example with the upper strip overhanging to the left.
    CHECK(layout(validate({{0, 2}, {4, 5}})) == StripLayout{{1, 2}, {0, 5}});
}

TEST_CASE("layout round trip and cell geometry") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& x : collect(enumerate_board_pile(n))) {
            const auto placed = layout(x);
            std::int64_t min_x = placed[0].x_start;
            for (const auto& p : placed) min_x = std::min(min_x, p.x_start);
            CHECK(min_x == 0);
            CHECK(from_layout(placed) == x);
            CHECK(testing_support::encode_cells(testing_support::cells_of(x)) ==
                  std::vector<Strip>(x.strips().begin(), x.strips().end()));
        }
    }
}

TEST_CASE("render_ascii") {
    CHECK(render_ascii(validate({{0, 3}})) == "###");
    CHECK(render_ascii(validate({{0, 1}, {1, 1}})) == "#\n#");
    CHECK(render_ascii(validate({{0, 2}, {3, 3}, {2, 1}})) == " #\n###\n##");
    CHECK(render_ascii(validate({{0, 2}, {4, 5}})) == "#####\n ##");
}

TEST_CASE("reflect") {
    CHECK(reflect(validate({{0, 2}, {4, 5}})) == validate({{0, 5}, {3, 2}}));
    CHECK(reflect(validate({{0, 4}})) == validate({{0, 4}}));
    CHECK(reflect(validate({{0, 2}, {3, 3}, {2, 1}})) == validate({{0, 1}, {2, 3}, {2, 2}}));

    for (int n = 1; n <= 8; ++n) {
        for (const auto& x : collect(enumerate_board_pile(n))) {
            const auto y = reflect(x);
            CHECK(reflect(y) == x);
            CHECK(y.cell_count() == x.cell_count());
            auto lx = x.lengths();
            auto ly = y.lengths();
            std::reverse(ly.begin(), ly.end());
            CHECK(lx == ly);
            if (x.strip_count() == 2) {
                CHECK(y.strips()[1].offset == x.strips()[0].length + x.strips()[1].length - x.strips()[1].offset);
            }
        }
    }
}

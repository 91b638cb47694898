#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "twoblock/circle_diagram.hpp"

using namespace twoblock;

namespace {

std::vector<TableauType> all_types(int n) {
    std::vector<TableauType> out;
    for (const auto& dims : type_sequences(n)) {
        int r = 0;
        for (size_t i = 0; i < dims.size(); ++i)
            if (dims[i] - (i ? dims[i - 1] : 0) == 2) ++r;
        for (int k = r; 2 * k <= n; ++k) out.emplace_back(n, k, dims);
    }
    return out;
}

std::multiset<std::vector<int>> circle_point_sets(const CircleDiagram& cc, CircleColour colour) {
    std::multiset<std::vector<int>> out;
    for (const auto& c : cc.circles)
        if (c.colour == colour) out.insert(c.points);
    return out;
}

}  // namespace

TEST_SUITE("circle_diagrams") {

TEST_CASE("circle diagram of (6543/731, 7543/631)") {
    CircleDiagram cc = circle_diagram(parse_tableau("6543/731"), parse_tableau("7543/631"));
    CHECK(cc.count(CircleColour::Black) == 1);
    CHECK(cc.count(CircleColour::Green) == 2);
    CHECK(cc.count(CircleColour::Red) == 0);
    CHECK(!cc.has_red());
    CHECK(!is_empty_intersection(cc));

    CHECK(circle_point_sets(cc, CircleColour::Black) ==
          std::multiset<std::vector<int>>{{1, 4}});
    CHECK(circle_point_sets(cc, CircleColour::Green) ==
          std::multiset<std::vector<int>>{{0, 5}, {-1, 6, 7, 8}});
    CHECK(cc.lo == -1);
    CHECK(cc.hi == 8);
    CHECK(cc.circle_of(7).colour == CircleColour::Green);
    CHECK_THROWS_AS(cc.circle_of(99), std::invalid_argument);
}

TEST_CASE("circle diagram of (6543/731, 7653/431) is red") {
    CircleDiagram cc = circle_diagram(parse_tableau("6543/731"), parse_tableau("7653/431"));
    CHECK(cc.has_red());
    CHECK(is_empty_intersection(cc));
    // every circle of this pair is red
    CHECK(cc.count(CircleColour::Red) == static_cast<int>(cc.circles.size()));
    CHECK(cc.circles.size() == 1);
}

TEST_CASE("diagonal circle diagram of a standard tableau") {
    CircleDiagram cc = circle_diagram(parse_tableau("43/21"), parse_tableau("43/21"));
    CHECK(cc.count(CircleColour::Black) == 2);
    CHECK(cc.circles.size() == 2);
    CHECK(circle_point_sets(cc, CircleColour::Black) ==
          std::multiset<std::vector<int>>{{1, 4}, {2, 3}});
    auto blacks = cc.black_circles();
    REQUIRE(blacks.size() == 2);
    // sorted by smallest point
    CHECK(blacks[0]->points.front() == 1);
    CHECK(blacks[1]->points.front() == 2);
}

TEST_CASE("all-cross pair has no circles") {
    CircleDiagram cc = circle_diagram(parse_tableau("2/2"), parse_tableau("2/2"));
    CHECK(cc.circles.empty());
    CHECK(!cc.has_red());

    CircleDiagram plus = cc_plus(cc);
    CHECK(plus.circles.size() == 1);
    CHECK(plus.circles.front().colour == CircleColour::Green);
    CHECK(plus.circles.front().points == std::vector<int>{0, 3});
    CHECK(plus.lo == 0);
    CHECK(plus.hi == 3);
}

TEST_CASE("type mismatch is rejected") {
    CHECK_THROWS_AS(circle_diagram(parse_tableau("43/21"), parse_tableau("2/1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(circle_diagram(parse_tableau("43/21"), parse_tableau("431/53")),
                    std::invalid_argument);
}

TEST_CASE("padding reaches the common point range") {
    CircleDiagram plus = cc_plus(parse_tableau("43/21"), parse_tableau("43/21"));
    CHECK(plus.lo == -2);
    CHECK(plus.hi == 7);
    CHECK(plus.count(CircleColour::Black) == 2);
    CHECK(plus.count(CircleColour::Green) == 3);  // three enclosing circles
    CHECK(circle_point_sets(plus, CircleColour::Green) ==
          std::multiset<std::vector<int>>{{0, 5}, {-1, 6}, {-2, 7}});

    // padding an already padded diagram changes nothing
    CircleDiagram twice = cc_plus(plus);
    CHECK(twice.lo == plus.lo);
    CHECK(twice.hi == plus.hi);
    CHECK(twice.lower == plus.lower);
    CHECK(twice.upper == plus.upper);
}

TEST_CASE("all padded diagrams of a type share the point range") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n)) {
            int r = static_cast<int>(type.doubles().size());
            auto ts = enumerate_row_strict(type);
            for (const auto& w : ts)
                for (const auto& w2 : ts) {
                    CircleDiagram cc = circle_diagram(w, w2);
                    CircleDiagram plus = cc_plus(cc);
                    CHECK(plus.lo == -(type.n - type.k - r));
                    CHECK(plus.hi == type.n + type.k - r + 1);
                    // padding never changes colour counts other than green
                    CHECK(plus.count(CircleColour::Black) == cc.count(CircleColour::Black));
                    CHECK(plus.has_red() == cc.has_red());
                    CHECK(plus.count(CircleColour::Green) >= cc.count(CircleColour::Green));
                }
        }
}

TEST_CASE("diagonal diagrams: one circle per cup, never red") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n))
            for (const auto& w : enumerate_row_strict(type)) {
                CircleDiagram cc = circle_diagram(w, w);
                ExtendedCupDiagram e = extended_cup_rowstrict(w);
                CHECK(cc.circles.size() == e.arcs.size());
                CHECK(!cc.has_red());
                CHECK(cc.count(CircleColour::Black) == e.black_count());
            }
}

TEST_CASE("redness is symmetric in the two tableaux") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n)) {
            auto ts = enumerate_row_strict(type);
            for (const auto& w : ts)
                for (const auto& w2 : ts)
                    CHECK(circle_diagram(w, w2).has_red() == circle_diagram(w2, w).has_red());
        }
}

TEST_CASE("every point carries one lower and one upper arc end") {
    for (const auto& type : all_types(5)) {
        auto ts = enumerate_row_strict(type);
        for (const auto& w : ts)
            for (const auto& w2 : ts) {
                CircleDiagram cc = circle_diagram(w, w2);
                std::set<int> seen;
                for (const auto& c : cc.circles)
                    for (int p : c.points) CHECK(seen.insert(p).second);
                // all non-cross points of [lo,hi] lie on exactly one circle
                size_t expect = 0;
                for (int p = cc.lo; p <= cc.hi; ++p)
                    if (!std::binary_search(cc.crosses.begin(), cc.crosses.end(), p)) ++expect;
                CHECK(seen.size() == expect);
            }
    }
}

}  // TEST_SUITE

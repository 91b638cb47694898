#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoblock/tableau.hpp"

using namespace twoblock;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::set<std::string> row_strings(const std::vector<RowStrictTableau>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(t.row_string());
    return out;
}

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

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("type validation") {
    TableauType t(5, 2, {1, 3, 4, 5});
    CHECK(t.doubles() == std::vector<int>{3});
    CHECK(t.crosses() == std::vector<int>{2, 3});
    CHECK(t.singles() == std::vector<int>{1, 4, 5});
    CHECK(t.skipped() == std::vector<int>{2});
    CHECK(!t.is_full());
    CHECK(full_type(4, 2).is_full());

    CHECK_THROWS_AS(TableauType(4, 2, {1, 4}), std::invalid_argument);     // step of 3
    CHECK_THROWS_AS(TableauType(4, 3, {1, 2, 3, 4}), std::invalid_argument);  // n < 2k
    CHECK_THROWS_AS(TableauType(4, 0, {2, 4}), std::invalid_argument);     // doubles > k
    CHECK_THROWS_AS(TableauType(4, 2, {1, 2, 3}), std::invalid_argument);  // does not end at n

    // empty type: shape of p_reduce(w) when every entry of w is a double
    TableauType empty(0, 0, {});
    CHECK(empty.is_full());
    CHECK(empty.doubles().empty());
}

TEST_CASE("row and weight strings") {
    RowStrictTableau w = parse_tableau("531/643");
    CHECK(w.type == TableauType(6, 3, {1, 3, 4, 5, 6}));
    CHECK(w.weight_string() == "^xxv^v");
    CHECK(w.row_string() == "531/643");
    CHECK(w.top_row() == std::vector<int>{5, 3, 1});
    CHECK(w.bottom_row() == std::vector<int>{6, 4, 3});
    CHECK(w.at(3) == Sym::Cross);
    CHECK(w.at(1) == Sym::Wedge);
    CHECK(w.at(6) == Sym::Vee);

    CHECK(parse_tableau("653/431").weight_string() == "vxxv^^");
    CHECK(parse_tableau("21/").weight_string() == "^^");
    CHECK(parse_tableau("6543/731").weight_string() == "vxx^^^v");
    CHECK(parse_tableau("7543/631").weight_string() == "vxx^^v^");
}

TEST_CASE("parse round-trips and rejects garbage") {
    for (const char* s : {"6543/731", "43/21", "21/43", "2/2", "21/", "431/53"}) {
        RowStrictTableau w = parse_tableau(s);
        CHECK(w.row_string() == s);
        CHECK(parse_tableau(w.row_string()) == w);
    }
    // comma separated form for n > 9
    RowStrictTableau big = parse_tableau("10,9,8,7,6/5,4,3,2,1");
    CHECK(big.type == full_type(10, 5));
    CHECK(big.row_string() == "10,9,8,7,6/5,4,3,2,1");

    CHECK_THROWS_AS(parse_tableau("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("21/21"), std::invalid_argument);  // not a valid entry multiset
    CHECK_THROWS_AS(parse_tableau("12/34"), std::invalid_argument);  // rows not decreasing
    CHECK_THROWS_AS(parse_tableau(""), std::invalid_argument);
}

TEST_CASE("standardness") {
    CHECK(parse_tableau("43/21").is_standard());
    CHECK(parse_tableau("42/31").is_standard());
    CHECK(!parse_tableau("21/43").is_standard());
    CHECK(!parse_tableau("31/42").is_standard());
    CHECK(parse_tableau("7543/631").is_standard());
    CHECK(!parse_tableau("6543/731").is_standard());
    CHECK(parse_tableau("2/2").is_standard());

    // 431/53 is row strict of type (1,3,4,5) but not standard; its standard
    // associate is 531/43
    RowStrictTableau w = parse_tableau("431/53");
    CHECK(!w.is_standard());
    auto rs = enumerate_row_strict(TableauType(5, 2, {1, 3, 4, 5}));
    CHECK(std::find(rs.begin(), rs.end(), w) != rs.end());
    CHECK(s_of_w(w) == parse_tableau("531/43"));
}

TEST_CASE("enumeration of row strict tableaux, n = 4 full") {
    auto ts = enumerate_row_strict(full_type(4, 2));
    CHECK(ts.size() == 6);
    CHECK(row_strings(ts) ==
          std::set<std::string>{"21/43", "31/42", "41/32", "32/41", "42/31", "43/21"});
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    // lexicographic in the weight with Wedge < Vee
    CHECK(ts.front().row_string() == "21/43");
    CHECK(ts.back().row_string() == "43/21");

    auto st = enumerate_standard(full_type(4, 2));
    CHECK(row_strings(st) == std::set<std::string>{"43/21", "42/31"});
}

TEST_CASE("enumeration edge cases") {
    CHECK(enumerate_row_strict(full_type(2, 0)).size() == 1);
    CHECK(enumerate_row_strict(full_type(2, 0)).front().row_string() == "21/");
    auto one = enumerate_row_strict(TableauType(2, 1, {2}));
    CHECK(one.size() == 1);
    CHECK(one.front().row_string() == "2/2");
    CHECK(one.front().is_standard());
    // 431/53 is one of the row strict tableaux of type (1,3,4,5)
    auto ts = enumerate_row_strict(TableauType(5, 2, {1, 3, 4, 5}));
    CHECK(row_strings(ts).count("431/53") == 1);
}

TEST_CASE("row strict counts match the closed formula") {
    // |row strict of (n,k,type with r doubles)| = C(n-2r, k-r)
    for (int n = 1; n <= 8; ++n)
        for (const auto& type : all_types(n)) {
            int r = static_cast<int>(type.doubles().size());
            CHECK(static_cast<long long>(enumerate_row_strict(type).size()) ==
                  binom(type.n - 2 * r, type.k - r));
        }
}

TEST_CASE("standard full counts are Catalan triangle numbers") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(static_cast<long long>(enumerate_standard(full_type(n, k)).size()) ==
                  binom(n, k) - binom(n, k - 1));
    CHECK(enumerate_standard(full_type(10, 5)).size() == 42);
}

TEST_CASE("standardisation") {
    CHECK(s_of_w(parse_tableau("531/643")).row_string() == "653/431");
    CHECK(s_of_w(parse_tableau("21/43")).row_string() == "43/21");
    CHECK(s_of_w(parse_tableau("31/42")).row_string() == "43/21");
    CHECK(s_of_w(parse_tableau("32/41")).row_string() == "42/31");
    CHECK(s_of_w(parse_tableau("41/32")).row_string() == "42/31");
    CHECK(s_of_w(parse_tableau("43/21")).row_string() == "43/21");
    CHECK(s_of_w(parse_tableau("42/31")).row_string() == "42/31");

    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n))
            for (const auto& w : enumerate_row_strict(type)) {
                RowStrictTableau s = s_of_w(w);
                CHECK(s.is_standard());
                CHECK(s_of_w(s) == s);  // idempotent
                if (w.is_standard()) CHECK(s == w);
            }
}

TEST_CASE("phi moves bottom doubles down") {
    CHECK(phi(parse_tableau("86431/763")).row_string() == "86431/752");
    CHECK(phi(parse_tableau("2/2")).row_string() == "2/1");
    CHECK(phi(parse_tableau("431/53")).row_string() == "431/52");
    // no doubles: phi is the identity
    RowStrictTableau s = parse_tableau("43/21");
    CHECK(phi(s) == s);
}

TEST_CASE("phi is injective and lands in standard tableaux") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n)) {
            std::set<std::string> seen;
            for (const auto& s : enumerate_standard(type)) {
                RowStrictTableau img = phi(s);
                CHECK(img.type.is_full());
                CHECK(img.is_standard());
                CHECK(seen.insert(img.row_string()).second);
            }
        }
}

TEST_CASE("phi commutes with standardisation") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n))
            for (const auto& w : enumerate_row_strict(type))
                CHECK(phi(s_of_w(w)) == s_of_w(phi(w)));
}

TEST_CASE("i_sigma and the phi image test") {
    // sigma = 86431/752 = phi(86431/763): type (1,3,4,6,7,8) skips {2,5}
    auto is = i_sigma(parse_tableau("86431/752"));
    CHECK(std::binary_search(is.begin(), is.end(), 2));
    CHECK(std::binary_search(is.begin(), is.end(), 5));
    CHECK(in_phi_image(parse_tableau("86431/752"), TableauType(8, 3, {1, 3, 4, 6, 7, 8})));

    // full type: no skipped index, every standard sigma qualifies
    CHECK(in_phi_image(parse_tableau("43/21"), full_type(4, 2)));

    // type (1,3,4): the only standard tableau is 43/31, phi(43/31) = 43/21
    CHECK(in_phi_image(parse_tableau("43/21"), TableauType(4, 2, {1, 3, 4})));
    CHECK(!in_phi_image(parse_tableau("42/31"), TableauType(4, 2, {1, 3, 4})));
}

TEST_CASE("in_phi_image characterises the image of phi") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n)) {
            std::set<std::string> image;
            for (const auto& s : enumerate_standard(type)) image.insert(phi(s).row_string());
            for (const auto& sigma : enumerate_standard(full_type(n, type.k)))
                CHECK(in_phi_image(sigma, type) == (image.count(sigma.row_string()) == 1));
        }
}

TEST_CASE("p_reduce deletes double boxes") {
    RowStrictTableau red = p_reduce(parse_tableau("6543/731"));
    CHECK(red.row_string() == "432/51");
    CHECK(red.type == full_type(5, 2));

    // all entries double: empty tableau
    RowStrictTableau empty = p_reduce(parse_tableau("2/2"));
    CHECK(empty.type == TableauType(0, 0, {}));
    CHECK(empty.row_string() == "/");

    // no doubles: identity
    RowStrictTableau s = parse_tableau("43/21");
    CHECK(p_reduce(s) == s);

    // p preserves standardness and row strictness
    for (int n = 1; n <= 6; ++n)
        for (const auto& type : all_types(n))
            for (const auto& w : enumerate_row_strict(type)) {
                RowStrictTableau p = p_reduce(w);
                CHECK(p.type.is_full());
                CHECK(p.type.n == type.n - 2 * static_cast<int>(type.doubles().size()));
                if (w.is_standard()) CHECK(p.is_standard());
            }
}

TEST_CASE("fixed point profile") {
    // w = 21/43: F_1 = <e1>, F_2 = <e1,e2>, F_3 adds f1, F_4 adds f2
    auto prof = fixed_point_profile(parse_tableau("21/43"));
    CHECK(prof == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {2, 2}});
    // w = 6543/731, type (1,3,4,5,6,7)
    auto prof2 = fixed_point_profile(parse_tableau("6543/731"));
    CHECK(prof2 ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 3}});
}

TEST_CASE("type_sequences lists every step-1/2 sequence") {
    CHECK(type_sequences(0) == std::vector<std::vector<int>>{{}});
    CHECK(type_sequences(1) == std::vector<std::vector<int>>{{1}});
    CHECK(type_sequences(3) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3}, {2, 3}});
    // Fibonacci count, lexicographically sorted
    CHECK(type_sequences(6).size() == 13);
    auto seqs = type_sequences(6);
    CHECK(std::is_sorted(seqs.begin(), seqs.end()));
}

}  // TEST_SUITE

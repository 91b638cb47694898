#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "twoblock/circle_diagram.hpp"
#include "twoblock/flag_oracle.hpp"
#include "twoblock/verify.hpp"

using namespace twoblock;

namespace {

Subspace span_of(const Ambient& amb, const std::vector<Vec>& gens) {
    return Subspace(amb.n, Matrix(gens.begin(), gens.end()));
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

TEST_SUITE("flag_oracle") {

TEST_CASE("ambient operator") {
    Ambient amb(4, 2);
    CHECK(mat_apply(amb.N, amb.e(2)) == amb.e(1));
    CHECK(mat_apply(amb.N, amb.e(1)) == Vec(4, Rational(0)));
    CHECK(mat_apply(amb.N, amb.f(2)) == amb.f(1));
    CHECK(mat_apply(amb.N, amb.f(1)) == Vec(4, Rational(0)));
    // N^{n-k} = 0
    Matrix n2 = mat_pow(amb.N, 2);
    for (const auto& row : n2)
        for (const auto& x : row) CHECK(x == Rational(0));
}

TEST_CASE("n-invariance of spans") {
    Ambient amb(3, 1);
    CHECK(is_n_invariant(amb, span_of(amb, {amb.e(1)})));
    CHECK(!is_n_invariant(amb, span_of(amb, {amb.e(2)})));  // N e2 = e1 not in <e2>
    CHECK(is_n_invariant(amb, amb.zero()));
    CHECK(is_n_invariant(amb, amb.full()));
}

TEST_CASE("iterated preimages") {
    Ambient amb(4, 2);
    CHECK(n_preimage(amb, amb.zero()) == span_of(amb, {amb.e(1), amb.f(1)}));
    CHECK(n_preimage(amb, amb.full()) == amb.full());
    CHECK(n_preimage(amb, amb.zero(), 2) == amb.full());

    for (long long lambda : {0LL, 1LL, -1LL, 2LL}) {
        Vec gen(4, Rational(0));
        gen[0] = 1;       // e1
        gen[2] = lambda;  // + lambda f1
        Vec lift(4, Rational(0));
        lift[1] = 1;
        lift[3] = lambda;
        CHECK(n_preimage(amb, Subspace(4, Matrix{gen})) ==
              span_of(amb, {amb.e(1), amb.f(1), lift}));
    }
}

TEST_CASE("fixed point flag of 21/43") {
    Ambient amb(4, 2);
    Flag f = fixed_point_flag(amb, parse_tableau("21/43"));
    REQUIRE(f.size() == 5);  // 0 and dims 1..4
    CHECK(f.at(0) == amb.zero());
    CHECK(f.at(1) == span_of(amb, {amb.e(1)}));
    CHECK(f.at(2) == span_of(amb, {amb.e(1), amb.e(2)}));
    CHECK(f.at(3) == span_of(amb, {amb.e(1), amb.e(2), amb.f(1)}));
    CHECK(f.at(4) == amb.full());
}

TEST_CASE("fixed point flag of 6543/731") {
    Ambient amb(7, 3);
    Flag f = fixed_point_flag(amb, parse_tableau("6543/731"));
    REQUIRE(f.size() == 7);  // 0 and the six type dimensions
    CHECK(f.at(1) == span_of(amb, {amb.f(1)}));
    CHECK(f.at(3) == span_of(amb, {amb.e(1), amb.f(1), amb.f(2)}));
    CHECK(f.at(4) == span_of(amb, {amb.e(1), amb.e(2), amb.f(1), amb.f(2)}));
    CHECK(f.at(5) == span_of(amb, {amb.e(1), amb.e(2), amb.e(3), amb.f(1), amb.f(2)}));
    CHECK(f.at(6) ==
          span_of(amb, {amb.e(1), amb.e(2), amb.e(3), amb.e(4), amb.f(1), amb.f(2)}));
    CHECK(f.at(7) == amb.full());
    CHECK(f.count(2) == 0);  // skipped dimension carries no space
}

TEST_CASE("fixed point flags are Spaltenstein flags and satisfy their own graph") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& type : all_types(n)) {
            Ambient amb(type.n, type.k);
            for (const auto& w : enumerate_row_strict(type)) {
                Flag f = fixed_point_flag(amb, w);
                CHECK(is_spaltenstein_flag(amb, type, f));
                CHECK(satisfies(amb, dep_graph_rowstrict(w), f));
            }
        }
}

TEST_CASE("a flag violating n-invariance is rejected") {
    Ambient amb(3, 1);
    Flag f;
    f[0] = amb.zero();
    f[1] = span_of(amb, {amb.e(2)});
    f[2] = span_of(amb, {amb.e(2), amb.e(1)});
    f[3] = amb.full();
    CHECK(!is_spaltenstein_flag(amb, full_type(3, 1), f));
}

TEST_CASE("fixed points in intersections") {
    // red circle diagram: empty intersection
    CHECK(fixed_points_in_intersection(parse_tableau("6543/731"), parse_tableau("7653/431"))
              .empty());

    // non-red: at least 2^{black circles} fixed points
    auto pts = fixed_points_in_intersection(parse_tableau("6543/731"), parse_tableau("7543/631"));
    CHECK(pts.size() >= 2);

    // diagonal: w itself always lies in its own component
    auto diag = fixed_points_in_intersection(parse_tableau("43/21"), parse_tableau("43/21"));
    CHECK(std::find(diag.begin(), diag.end(), parse_tableau("43/21")) != diag.end());
}

TEST_CASE("emptiness matches redness on small ranks") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& type : all_types(n)) {
            auto ts = enumerate_row_strict(type);
            for (const auto& w : ts)
                for (const auto& w2 : ts) {
                    bool red = circle_diagram(w, w2).has_red();
                    CHECK(fixed_points_in_intersection(w, w2).empty() == red);
                }
        }
}

TEST_CASE("pi drops the double-entry spaces") {
    Ambient amb(7, 3);
    RowStrictTableau w = parse_tableau("6543/731");
    Flag reduced = pi_map(amb, w.type, fixed_point_flag(amb, w));
    Ambient small(5, 2);
    CHECK(reduced == fixed_point_flag(small, p_reduce(w)));  // p(w) = 432/51
}

TEST_CASE("pi on a full type is the identity") {
    Ambient amb(4, 2);
    RowStrictTableau w = parse_tableau("43/21");
    Flag f = fixed_point_flag(amb, w);
    CHECK(pi_map(amb, w.type, f) == f);
}

TEST_CASE("pi maps the all-cross flag to the empty flag") {
    Ambient amb(2, 1);
    RowStrictTableau w = parse_tableau("2/2");
    Flag reduced = pi_map(amb, w.type, fixed_point_flag(amb, w));
    REQUIRE(reduced.size() == 1);
    CHECK(reduced.at(0) == Subspace(0));
}

TEST_CASE("pi_inverse inverts pi on fixed point flags") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& type : all_types(n)) {
            Ambient amb(type.n, type.k);
            for (const auto& w : enumerate_row_strict(type)) {
                Flag f = fixed_point_flag(amb, w);
                Flag reduced = pi_map(amb, type, f);
                CHECK(pi_inverse(amb, type, reduced) == f);
            }
        }
}

TEST_CASE("pi is compatible with the tableau reduction") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& type : all_types(n)) {
            Ambient amb(type.n, type.k);
            int r = static_cast<int>(type.doubles().size());
            Ambient small(type.n - 2 * r, type.k - r);
            for (const auto& w : enumerate_row_strict(type))
                CHECK(pi_map(amb, type, fixed_point_flag(amb, w)) ==
                      fixed_point_flag(small, p_reduce(w)));
        }
}

TEST_CASE("verification suite: fixed points") {
    SuiteResult r = verify_fixedpoints(5);
    CHECK(r.passed);
    CHECK(r.cases > 0);
}

}  // TEST_SUITE

// test_rootsys.cpp - root systems, hulls, type decomposition, Levi test,
// path sums, and Weyl conjugacy.
#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dcoset/root_system.hpp"
#include "dcoset/subsystem.hpp"
#include "dcoset/weyl.hpp"

using namespace dcoset;

namespace {

Root rv(std::initializer_list<int> xs) { return Root(xs); }

// Independent recomputation of a closed hull: enumerate all small integer
// combinations of the base and keep the ambient roots among them.  Coefficient
// magnitudes in classical systems never exceed 2 per base vector of an
// independent set; the bound 4 leaves headroom.
std::set<Root> brute_hull(const RootSystem& g, const std::vector<Root>& base) {
    std::set<Root> out;
    const int B = 4;
    std::vector<int> c(base.size(), -B);
    while (true) {
        Root sum(g.dim, 0);
        for (size_t i = 0; i < base.size(); ++i)
            for (int k = 0; k < g.dim; ++k) sum[k] += c[i] * base[i][k];
        if (g.contains(sum)) out.insert(sum);
        size_t i = 0;
        while (i < base.size() && c[i] == B) c[i++] = -B;
        if (i == base.size()) break;
        ++c[i];
    }
    return out;
}

void check_hull_matches_brute(const RootSystem& g, const std::vector<Root>& base) {
    Subsystem s = closed_hull(g, base);
    std::set<Root> expect = brute_hull(g, base);
    std::set<Root> got(s.roots.begin(), s.roots.end());
    REQUIRE(got == expect);
}

}  // namespace

TEST_CASE("root counts match the closed formulas up to rank 8") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(build_root_system(Family::A, n).roots.size() == size_t(n * (n + 1)));
        CHECK(build_root_system(Family::B, n).roots.size() == size_t(2 * n * n));
        CHECK(build_root_system(Family::C, n).roots.size() == size_t(2 * n * n));
        if (n >= 2)
            CHECK(build_root_system(Family::D, n).roots.size() == size_t(2 * n * (n - 1)));
    }
}

TEST_CASE("simple roots follow the standard numbering") {
    auto b3 = build_root_system(Family::B, 3);
    CHECK(b3.alpha(1) == rv({1, -1, 0}));
    CHECK(b3.alpha(3) == rv({0, 0, 1}));
    auto c3 = build_root_system(Family::C, 3);
    CHECK(c3.alpha(3) == rv({0, 0, 2}));
    auto d4 = build_root_system(Family::D, 4);
    CHECK(d4.alpha(3) == rv({0, 0, 1, -1}));
    CHECK(d4.alpha(4) == rv({0, 0, 1, 1}));
    auto a2 = build_root_system(Family::A, 2);
    CHECK(a2.alpha(1) == rv({1, -1, 0}));
    CHECK_THROWS_AS(a2.alpha(3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::D, 1), std::invalid_argument);
}

TEST_CASE("every root has an integral expansion in the simple basis") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int n = (f == Family::D ? 2 : 1); n <= 5; ++n) {
            auto g = build_root_system(f, n);
            for (const Root& r : g.roots) {
                IntVec c = simple_coeffs(g, r);
                Root sum(g.dim, 0);
                for (int i = 0; i < g.rank; ++i)
                    for (int k = 0; k < g.dim; ++k) sum[k] += c[i] * g.simple[i][k];
                REQUIRE(sum == r);
            }
        }
    }
}

TEST_CASE("closed_hull matches brute-force integer combinations") {
    auto b4 = build_root_system(Family::B, 4);
    auto c3 = build_root_system(Family::C, 3);
    auto d4 = build_root_system(Family::D, 4);
    auto a4 = build_root_system(Family::A, 4);

    check_hull_matches_brute(b4, {b4.alpha(1), b4.alpha(2)});
    check_hull_matches_brute(b4, {b4.alpha(2), b4.alpha(4)});
    check_hull_matches_brute(b4, {rv({1, 1, 0, 0}), rv({1, -1, 0, 0})});
    check_hull_matches_brute(b4, {rv({0, 1, 0, 0}), rv({1, 0, 0, 0}), rv({0, 0, 1, -1})});
    check_hull_matches_brute(c3, {rv({2, 0, 0}), rv({0, 2, 0})});
    check_hull_matches_brute(c3, {rv({1, -1, 0}), rv({0, 2, 0})});
    check_hull_matches_brute(d4, {d4.alpha(1), d4.alpha(2), d4.alpha(3)});
    check_hull_matches_brute(d4, {d4.alpha(1), d4.alpha(2), d4.alpha(4)});
    check_hull_matches_brute(d4, {rv({1, 1, 0, 0}), rv({0, 0, 1, 1})});
    check_hull_matches_brute(a4, {a4.alpha(1), a4.alpha(3)});
    check_hull_matches_brute(a4, {rv({1, 0, -1, 0, 0}), rv({0, 1, 0, -1, 0})});
}

TEST_CASE("closed_hull validates its base") {
    auto b3 = build_root_system(Family::B, 3);
    CHECK_THROWS_AS(closed_hull(b3, {rv({3, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(closed_hull(b3, {rv({1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(closed_hull(b3, {b3.alpha(1), b3.alpha(1)}), std::invalid_argument);
    CHECK_THROWS_AS(
        closed_hull(b3, {rv({1, -1, 0}), rv({0, 1, -1}), rv({1, 0, -1})}),
        std::invalid_argument);
}

TEST_CASE("type decomposition applies the degenerate identifications") {
    auto d5 = build_root_system(Family::D, 5);
    // Full D_3 on three coordinates reads as A_3.
    auto d3sub = closed_hull(d5, {d5.alpha(3), d5.alpha(4), d5.alpha(5)});
    CHECK(d3sub.size() == 12);
    CHECK(is_type(classify_subsystem(d3sub), {{Family::A, 3}}));
    // D_2 splits into two orthogonal A_1.
    auto d2sub = closed_hull(d5, {rv({1, 1, 0, 0, 0}), rv({1, -1, 0, 0, 0})});
    CHECK(is_type(classify_subsystem(d2sub), {{Family::A, 1}, {Family::A, 1}}));

    auto b2 = build_root_system(Family::B, 2);
    CHECK(is_type(classify_subsystem(full_subsystem(b2)), {{Family::B, 2}}));
    auto c2 = build_root_system(Family::C, 2);
    CHECK(is_type(classify_subsystem(full_subsystem(c2)), {{Family::B, 2}}));

    auto b4 = build_root_system(Family::B, 4);
    CHECK(is_type(classify_subsystem(full_subsystem(b4)), {{Family::B, 4}}));
    auto b3in4 = closed_hull(b4, {b4.alpha(2), b4.alpha(3), b4.alpha(4)});
    CHECK(is_type(classify_subsystem(b3in4), {{Family::B, 3}}));
    auto c4 = build_root_system(Family::C, 4);
    CHECK(is_type(classify_subsystem(full_subsystem(c4)), {{Family::C, 4}}));
    auto d4 = build_root_system(Family::D, 4);
    CHECK(is_type(classify_subsystem(full_subsystem(d4)), {{Family::D, 4}}));

    CHECK(classify_subsystem(empty_subsystem(b4)).empty());
    CHECK(type_string(classify_subsystem(empty_subsystem(b4))) == "0");
    CHECK(type_string(classify_subsystem(full_subsystem(c4))) == "C4");
}

TEST_CASE("dim_subsystem counts roots plus span rank") {
    auto b2 = build_root_system(Family::B, 2);
    CHECK(dim_subsystem(empty_subsystem(b2)) == 0);
    CHECK(dim_subsystem(full_subsystem(b2)) == 10);
    auto a3 = build_root_system(Family::A, 3);
    CHECK(dim_subsystem(full_subsystem(a3)) == 15);
    auto longs = closed_hull(b2, {rv({1, 1}), rv({1, -1})});
    CHECK(dim_subsystem(longs) == 6);
    auto one = closed_hull(a3, {a3.alpha(2)});
    CHECK(dim_subsystem(one) == 3);
}

TEST_CASE("Levi test is rational closure") {
    auto b2 = build_root_system(Family::B, 2);
    auto longs = closed_hull(b2, {rv({1, 1}), rv({1, -1})});
    CHECK_FALSE(is_levi_subsystem(longs));  // spans everything, misses the shorts
    auto c2 = build_root_system(Family::C, 2);
    auto longs_c = closed_hull(c2, {rv({2, 0}), rv({0, 2})});
    CHECK_FALSE(is_levi_subsystem(longs_c));
    CHECK(is_levi_subsystem(closed_hull(c2, {rv({2, 0})})));
    CHECK(is_levi_subsystem(closed_hull(c2, {rv({1, -1})})));
    CHECK(is_levi_subsystem(closed_hull(c2, {rv({1, 1})})));

    auto b4 = build_root_system(Family::B, 4);
    CHECK(is_levi_subsystem(empty_subsystem(b4)));
    CHECK(is_levi_subsystem(full_subsystem(b4)));
    CHECK(is_levi_subsystem(closed_hull(b4, {b4.alpha(1), b4.alpha(2)})));
    CHECK(is_levi_subsystem(closed_hull(b4, {b4.alpha(1), b4.alpha(2), b4.alpha(4)})));
    CHECK_FALSE(is_levi_subsystem(closed_hull(b4, {rv({0, 0, 1, 1}), rv({0, 0, 1, -1})})));

    auto d4 = build_root_system(Family::D, 4);
    CHECK(is_levi_subsystem(closed_hull(d4, {d4.alpha(1), d4.alpha(2), d4.alpha(4)})));
    CHECK(is_levi_subsystem(closed_hull(d4, {rv({1, 1, 0, 0})})));
}

TEST_CASE("sum_over_path follows the node interval and validates the result") {
    auto a3 = build_root_system(Family::A, 3);
    CHECK(sum_over_path(a3, 1, 3) == rv({1, 0, 0, -1}));
    CHECK(sum_over_path(a3, 3, 1) == rv({1, 0, 0, -1}));
    CHECK(sum_over_path(a3, 2, 2) == a3.alpha(2));
    auto b3 = build_root_system(Family::B, 3);
    CHECK(sum_over_path(b3, 1, 3) == rv({1, 0, 0}));
    auto c3 = build_root_system(Family::C, 3);
    CHECK(sum_over_path(c3, 1, 3) == rv({1, 0, 1}));
    auto d4 = build_root_system(Family::D, 4);
    CHECK(sum_over_path(d4, 1, 3) == rv({1, 0, 0, -1}));
    CHECK_THROWS_AS(sum_over_path(d4, 3, 4), std::invalid_argument);  // 2e_3 is no root
    auto d5 = build_root_system(Family::D, 5);
    CHECK_THROWS_AS(sum_over_path(d5, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(sum_over_path(d5, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sum_over_path(d5, 1, 6), std::invalid_argument);
}

TEST_CASE("Weyl conjugacy distinguishes the three A_3 Levi classes of D_4") {
    auto d4 = build_root_system(Family::D, 4);
    auto s123 = closed_hull(d4, {d4.alpha(1), d4.alpha(2), d4.alpha(3)});
    auto s124 = closed_hull(d4, {d4.alpha(1), d4.alpha(2), d4.alpha(4)});
    auto s234 = closed_hull(d4, {d4.alpha(2), d4.alpha(3), d4.alpha(4)});
    CHECK_FALSE(weyl_conjugate(s123, s124).has_value());
    CHECK_FALSE(weyl_conjugate(s123, s234).has_value());
    CHECK_FALSE(weyl_conjugate(s124, s234).has_value());
    CHECK(weyl_conjugate(s123, s123).has_value());
}

TEST_CASE("Weyl conjugacy witnesses map the source onto the target") {
    auto b4 = build_root_system(Family::B, 4);
    auto s = closed_hull(b4, {b4.alpha(1), b4.alpha(2)});          // A_2 on coords 1..3
    auto t = closed_hull(b4, {b4.alpha(2), b4.alpha(3)});          // A_2 on coords 2..4
    auto w = weyl_conjugate(s, t);
    REQUIRE(w.has_value());
    CHECK(apply(*w, s) == t);

    // Short against long A_1 in C_2 differ in length; not conjugate.
    auto c2 = build_root_system(Family::C, 2);
    auto shortr = closed_hull(c2, {rv({1, -1})});
    auto longr = closed_hull(c2, {rv({2, 0})});
    CHECK_FALSE(weyl_conjugate(shortr, longr).has_value());

    // In D_2 a single sign flip is not allowed; diff and sum A_1 stay apart.
    auto d2 = build_root_system(Family::D, 2);
    auto diff = closed_hull(d2, {rv({1, -1})});
    auto sum = closed_hull(d2, {rv({1, 1})});
    CHECK_FALSE(weyl_conjugate(diff, sum).has_value());
    // In B_2 the flip is available.
    auto b2 = build_root_system(Family::B, 2);
    auto diff_b = closed_hull(b2, {rv({1, -1})});
    auto sum_b = closed_hull(b2, {rv({1, 1})});
    auto wb = weyl_conjugate(diff_b, sum_b);
    REQUIRE(wb.has_value());
    CHECK(apply(*wb, diff_b) == sum_b);

    // A-family allows permutations only: e_1-e_2 never maps to e_2-e_1 alone...
    // it does, via the transposition; sets are closed under negation anyway.
    auto a3 = build_root_system(Family::A, 3);
    auto u = closed_hull(a3, {a3.alpha(1)});
    auto v = closed_hull(a3, {a3.alpha(3)});
    CHECK(weyl_conjugate(u, v).has_value());

    auto trivially = weyl_conjugate(empty_subsystem(a3), empty_subsystem(a3));
    CHECK(trivially.has_value());
}

TEST_CASE("weyl_order formulas") {
    CHECK(weyl_order(Family::A, 3) == 24);
    CHECK(weyl_order(Family::B, 2) == 8);
    CHECK(weyl_order(Family::C, 4) == 384);
    CHECK(weyl_order(Family::D, 4) == 192);
}

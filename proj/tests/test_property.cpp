// Exhaustive finite-field checks of the decomposition properties: form
// identities across orthogonal projections, the lasso dimension bound, the
// first-block orbit reduction, and the parity classes of even orthogonal
// spaces.
#include <catch2/catch_amalgamated.hpp>

#include "dcoset/property_checks.hpp"

using namespace dcoset;

TEST_CASE("forms split across every orthogonal decomposition") {
    for (int q : {2, 3}) {
        for (int split : {1}) {
            const FormedSpace c2 = build_formed_space(Family::C, 2, q);
            REQUIRE(check_projection_form_identities(c2, decompose(c2, split)).passed);
            const FormedSpace d2 = build_formed_space(Family::D, 2, q);
            REQUIRE(check_projection_form_identities(d2, decompose(d2, split)).passed);
            const FormedSpace b2 = build_formed_space(Family::B, 2, q);
            REQUIRE(check_projection_form_identities(b2, decompose(b2, split)).passed);
        }
        for (int split : {1, 2}) {
            const FormedSpace c3 = build_formed_space(Family::C, 3, q);
            REQUIRE(check_projection_form_identities(c3, decompose(c3, split)).passed);
            const FormedSpace d3 = build_formed_space(Family::D, 3, q);
            REQUIRE(check_projection_form_identities(d3, decompose(d3, split)).passed);
        }
    }
    // Oversized exhaustive enumerations are rejected, sampled ones accepted.
    const FormedSpace c4 = build_formed_space(Family::C, 4, 5);
    REQUIRE_THROWS_AS(check_projection_form_identities(c4, decompose(c4, 2)),
                      oracle_budget_error);
    REQUIRE(check_projection_form_identities(c4, decompose(c4, 2), 2000).passed);
}

TEST_CASE("the lasso quotient vanishes in even dimension and is at most one in odd") {
    for (int q : {2, 3}) {
        const FormedSpace c2 = build_formed_space(Family::C, 2, q);
        REQUIRE(check_lasso_bound(c2, decompose(c2, 1)).passed);
        const FormedSpace d3 = build_formed_space(Family::D, 3, q);
        REQUIRE(check_lasso_bound(d3, decompose(d3, 1)).passed);
        REQUIRE(check_lasso_bound(d3, decompose(d3, 2)).passed);
        const FormedSpace b2 = build_formed_space(Family::B, 2, q);
        REQUIRE(check_lasso_bound(b2, decompose(b2, 1)).passed);
    }
    const FormedSpace c3 = build_formed_space(Family::C, 3, 2);
    REQUIRE(check_lasso_bound(c3, decompose(c3, 1)).passed);
    REQUIRE(check_lasso_bound(c3, decompose(c3, 2)).passed);
    const FormedSpace b3 = build_formed_space(Family::B, 3, 2);
    REQUIRE(check_lasso_bound(b3, decompose(b3, 1)).passed);
    REQUIRE(check_lasso_bound(b3, decompose(b3, 2)).passed);
}

TEST_CASE("orbit equivalence reduces to the first block when the second is full") {
    struct Row {
        Family fam;
        int n, q;
    };
    const Row rows[] = {{Family::C, 2, 2}, {Family::C, 2, 3}, {Family::C, 3, 2},
                        {Family::D, 2, 2}, {Family::D, 2, 3}, {Family::D, 3, 2},
                        {Family::D, 3, 3}, {Family::B, 2, 3}, {Family::B, 3, 2}};
    for (const Row& r : rows) {
        const FormedSpace s = build_formed_space(r.fam, r.n, r.q);
        for (int split = 1; split < r.n; ++split) {
            const SpaceDecomposition dec = decompose(s, split);
            REQUIRE(check_first_block_reduction(s, dec, {}).passed);
            const MatrixGroupInstance x1 = build_full_classical_block(s, 1, split, false);
            REQUIRE(check_first_block_reduction(s, dec, x1.gens).passed);
        }
    }
}

TEST_CASE("the reduction genuinely needs the class-swapping part of the second block") {
    for (int n : {2, 3, 4})
        for (int q : {2, 3}) {
            const FormedSpace s = build_formed_space(Family::D, n, q);
            for (int split = 1; split < n; ++split) {
                const PropertyCheck c =
                    check_first_block_reduction(s, decompose(s, split), {}, false);
                REQUIRE(!c.passed);
                REQUIRE(c.detail == "one pair class meets two X-orbits");
            }
        }
}

TEST_CASE("parity classes halve the maximal spaces and swap under determinant minus one") {
    for (int n : {2, 3, 4})
        for (int q : {2, 3}) {
            const FormedSpace s = build_formed_space(Family::D, n, q);
            REQUIRE(check_parity_classes(s).passed);
        }
}

TEST_CASE("the aggregated property report is clean on every small space") {
    struct Row {
        Family fam;
        int n, q;
    };
    const Row rows[] = {{Family::C, 2, 2}, {Family::C, 2, 3}, {Family::C, 3, 2},
                        {Family::D, 2, 2}, {Family::D, 2, 3}, {Family::D, 3, 2},
                        {Family::D, 3, 3}, {Family::B, 2, 2}, {Family::B, 2, 3},
                        {Family::B, 3, 2}};
    for (const Row& r : rows) {
        const PropertyReport rep =
            verify_section3_properties(build_formed_space(r.fam, r.n, r.q));
        INFO(family_letter(r.fam) << r.n << " q" << r.q);
        for (const auto& fail : rep.failures()) INFO(fail);
        REQUIRE(rep.ok());
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitkit/families.hpp"
#include "splitkit/rng.hpp"

using namespace splitkit;

TEST_CASE("family tags round-trip") {
    for (FamilyTag t : {FamilyTag::cor_quadric, FamilyTag::ci_22, FamilyTag::ci_222,
                        FamilyTag::quadrics_2k1, FamilyTag::quadrics_2k, FamilyTag::quadrics_k2,
                        FamilyTag::quartic_4n1})
        CHECK(parse_family_tag(family_tag_name(t)) == t);
    CHECK_FALSE(parse_family_tag("bogus").has_value());
}

TEST_CASE("single quadric family across the published range") {
    PrimeField f(kMersenne31);
    for (int n = 3; n <= 12; ++n) {
        auto v = verify_family(f, {FamilyTag::cor_quadric, n, 0, 0});
        CHECK(v.match);
        CHECK(v.computed == SplittingType(std::vector<int>(n - 2, n + 1)));
    }
}

TEST_CASE("two-quadric family: exact even splittings, balanced odd ones") {
    PrimeField f(kMersenne31);
    for (int n = 5; n <= 12; ++n) {
        auto v = verify_family(f, {FamilyTag::ci_22, n, 0, 0});
        CHECK(v.match);
        CHECK(is_balanced(v.computed));
        if (n % 2 == 0) {
            std::vector<int> want(2, n - 1);
            want.insert(want.end(), n - 5, n);
            CHECK(v.computed == SplittingType(want));
        }
    }
}

TEST_CASE("three-quadric family: balanced through n = 14, exact at multiples of three") {
    PrimeField f(kMersenne31);
    for (int n = 6; n <= 14; ++n) {
        auto v = verify_family(f, {FamilyTag::ci_222, n, 0, 0});
        CHECK(v.match);
        CHECK(is_balanced(v.computed));
        if (n % 3 == 0 && n >= 11) {
            std::vector<int> want(6, n - 2);
            want.insert(want.end(), n - 10, n - 1);
            CHECK(v.computed == SplittingType(want));
        }
    }
}

TEST_CASE("k-quadric families in the three ambient shapes") {
    PrimeField f(kMersenne31);
    for (int k = 2; k <= 6; ++k) {
        auto v1 = verify_family(f, {FamilyTag::quadrics_2k1, 0, k, 0});
        CHECK(v1.match);
        CHECK(v1.computed == SplittingType(std::vector<int>(k, 4)));
        auto v2 = verify_family(f, {FamilyTag::quadrics_2k, 0, k, 0});
        CHECK(v2.match);
        CHECK(v2.computed == SplittingType(std::vector<int>(k - 1, 2)));
        for (int e = 3; e <= k + 2; ++e) {
            auto v3 = verify_family(f, {FamilyTag::quadrics_k2, 0, k, e});
            CHECK(v3.match);
            CHECK(v3.computed == SplittingType({e * (3 - k) - 2}));
        }
    }
}

TEST_CASE("quartic family in characteristic two and generic characteristic") {
    PrimeField f2(2);
    auto v2 = verify_family(f2, {FamilyTag::quartic_4n1, 0, 0, 0});
    CHECK(v2.match);
    CHECK(v2.computed == SplittingType({7, 7, 9}));
    PrimeField f(kMersenne31);
    auto v = verify_family(f, {FamilyTag::quartic_4n1, 0, 0, 0});
    CHECK(v.match);
    CHECK(v.computed == SplittingType({7, 8, 8}));
    PrimeField f5(5);
    CHECK_THROWS_AS(verify_family(f5, {FamilyTag::quartic_4n1, 0, 0, 0}), input_error);
}

TEST_CASE("family parameter validation") {
    PrimeField f(kMersenne31);
    CHECK_THROWS_AS(build_family(f, {FamilyTag::ci_22, 4, 0, 0}), input_error);
    CHECK_THROWS_AS(build_family(f, {FamilyTag::quadrics_k2, 0, 2, 5}), input_error);
    CHECK_THROWS_AS(build_family(f, {FamilyTag::quadrics_k2, 0, 2, 2}), input_error);
    CHECK_THROWS_AS(verify_family(f, {FamilyTag::ci_222, 5, 0, 0}), input_error);
}

TEST_CASE("expected_balanced shapes") {
    // the single-quadric family type
    for (int n = 3; n <= 8; ++n)
        CHECK(expected_balanced(n, {2}, n) == SplittingType(std::vector<int>(n - 2, n + 1)));
    // rank 2, total degree 3
    CHECK(expected_balanced(4, {4}, 5) == SplittingType({1, 2}));
    // no hypersurfaces: rank n-1, degree e(n+1)-2; for e = n this is the
    // standard splitting of the full curve
    CHECK(expected_balanced(6, {}, 6) == SplittingType(std::vector<int>(5, 8)));
    CHECK_THROWS_AS(expected_balanced(4, {2, 2, 2}, 4), input_error);
}

TEST_CASE("very_free_min_degree published instances") {
    for (int n = 3; n <= 30; ++n) CHECK(very_free_min_degree(n, {n}) == n);
    CHECK(very_free_min_degree(7, {2, 2}) == 2);
    CHECK(very_free_min_degree(7, {3, 3}) == 3);
    CHECK_THROWS_AS(very_free_min_degree(4, {3, 3}), input_error);
}

TEST_CASE("property: ceiling definition of the very-free bound") {
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= 4; ++k) {
            // smallest interesting multidegrees of each total
            for (int total = 2 * k; total <= n; ++total) {
                std::vector<int> dg(k, 2);
                dg[0] = total - 2 * (k - 1);
                if (dg[0] < 2) continue;
                long long m = very_free_min_degree(n, dg);
                long long a = n - k + 1, b = n - total + 1;
                CHECK(m * b >= a);
                CHECK((m - 1) * b < a);
            }
        }
}

TEST_CASE("fano_check") {
    CHECK(fano_check(5, {2, 2}));
    CHECK(fano_check(5, {5}));
    CHECK_FALSE(fano_check(5, {3, 3}));
}

TEST_CASE("induction inequality on the full grid") {
    CHECK(induction_inequality(9, 2, 3));
    for (int n = 5; n <= 30; ++n)
        for (int j = 1; 2 * j + 3 <= n; ++j)
            for (int d = 3; 2 * j + d <= n; ++d) {
                if (n < 2 * j + 3) continue;
                CHECK(induction_inequality(n, j, d));
            }
}

TEST_CASE("conjecture_scan: single quadric reproduces the family type") {
    for (int n : {4, 6}) {
        auto rep = conjecture_scan(1, n, kMersenne31, 6, kDefaultSeed, 2);
        CHECK(rep.balanced + rep.smooth_failures == rep.trials);
        CHECK(rep.smooth_failures == 0);
        REQUIRE(rep.splittings.size() == 1);
        CHECK(rep.splittings[0].first == std::vector<int>(n - 2, n + 1));
        CHECK(rep.splittings[0].second == 6);
    }
}

TEST_CASE("conjecture_scan: counts add up and ordering is deterministic") {
    auto a = conjecture_scan(2, 6, kMersenne31, 5, 31337, 1);
    auto b = conjecture_scan(2, 6, kMersenne31, 5, 31337, 3);
    CHECK(a.balanced == b.balanced);
    CHECK(a.splittings == b.splittings);
    int total = a.smooth_failures;
    for (const auto& [t, c] : a.splittings) total += c;
    CHECK(total == a.trials);
}

#include "doctest.h"

#include "bam/bounds.hpp"
#include "bam/search.hpp"
#include "helpers.hpp"

using namespace bam;
using namespace bamtest;

TEST_CASE("lower_bound_k") {
    SUBCASE("rank-distance example") {
        const auto profile = make_profile(
            {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
            {{"v", {"a", "b", "c", "d", "e"}}, {"w", {"f", "d", "g", "h", "i"}}});
        CHECK(lower_bound_k(profile) == 6);
    }
    SUBCASE("empty profile") {
        CHECK(lower_bound_k(PreferenceProfile({}, {}, {})) == 0);
    }
    SUBCASE("three-cycle bound is not tight") {
        CHECK(lower_bound_k(cycle_three()) == 2);
        CHECK(oracle_min_k(cycle_three()) == 3);
    }
}

TEST_CASE("upper_bound_k") {
    CHECK(upper_bound_k(profile_from_orders(4, {{}, {}, {}})) == 9);   // min(12, 9)
    CHECK(upper_bound_k(profile_from_orders(1, {{}, {}})) == 0);
    CHECK(upper_bound_k(profile_from_orders(3, std::vector<std::vector<int>>(10))) == 6);
}

TEST_CASE("trivial_bam") {
    SUBCASE("single voter a>b") {
        const auto profile = make_profile({"a", "b"}, {{"v", {"a", "b"}}});
        const AttributeModel model = trivial_bam(profile);
        CHECK(model.k == 2);
        CHECK(model.has("a") == AttrSet{1});
        CHECK(model.has("b") == AttrSet{2});
        CHECK(model.cares("v") == AttrSet{1});
        CHECK(verify(profile, model).ok);
    }
    SUBCASE("no voters") {
        const auto profile = make_profile({"a", "b", "c"}, {});
        const AttributeModel model = trivial_bam(profile);
        CHECK(model.k == 6);
        CHECK(verify(profile, model).ok);
    }
    SUBCASE("three-cycle gets a valid (non-minimal) model") {
        const AttributeModel model = trivial_bam(cycle_three());
        CHECK(model.k == 6);
        CHECK(verify(cycle_three(), model).ok);
    }
    SUBCASE("random profiles always verify") {
        std::mt19937_64 rng(42);
        for (int round = 0; round < 200; ++round) {
            const PreferenceProfile profile = random_profile(rng, 1 + static_cast<int>(rng() % 6),
                                                             1 + static_cast<int>(rng() % 6), 6);
            CHECK(verify(profile, trivial_bam(profile)).ok);
        }
    }
}

TEST_CASE("cardinality_windows") {
    SUBCASE("tight windows at k = length-1") {
        const auto profile = make_profile({"a", "b", "c"}, {{"v", {"a", "b", "c"}}});
        const CardinalityWindows windows = cardinality_windows(profile, 2);
        REQUIRE(windows.feasible());
        CHECK(windows.has_low[0] == 2);
        CHECK(windows.has_high[0] == 2);
        CHECK(windows.has_low[1] == 1);
        CHECK(windows.has_high[1] == 1);
        CHECK(windows.has_low[2] == 0);
        CHECK(windows.has_high[2] == 0);
    }
    SUBCASE("order longer than k+1 is infeasible, blaming the voter") {
        const auto profile = make_profile({"a", "b", "c", "d"}, {{"v", {"a", "b", "c", "d"}}});
        const CardinalityWindows windows = cardinality_windows(profile, 2);
        REQUIRE_FALSE(windows.feasible());
        CHECK(windows.infeasible->kind == CardinalityWindows::Infeasibility::Kind::Voter);
        CHECK(windows.infeasible->id == "v");
        CHECK(windows.min_cares[0] == 3);
    }
    SUBCASE("cross-voter intersection") {
        // d at rank 1 for w (|order|=5) and rank 3 for v: window [3,3] at k=6.
        const auto profile = make_profile(
            {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
            {{"v", {"a", "b", "c", "d", "e"}}, {"w", {"f", "d", "g", "h", "i"}}});
        const CardinalityWindows windows = cardinality_windows(profile, 6);
        REQUIRE(windows.feasible());
        const int d = profile.alternative_index("d");
        CHECK(windows.has_low[d] == 3);
        CHECK(windows.has_high[d] == 3);
    }
    SUBCASE("empty intersection blames the alternative") {
        // c ranked top of a length-3 order and bottom of another: [2,?] vs [?,0].
        const auto profile = make_profile({"a", "b", "c", "x", "y"},
                                          {{"v", {"c", "a", "b"}}, {"w", {"x", "y", "c"}}});
        const CardinalityWindows windows = cardinality_windows(profile, 2);
        REQUIRE_FALSE(windows.feasible());
        CHECK(windows.infeasible->kind == CardinalityWindows::Infeasibility::Kind::Alternative);
        CHECK(windows.infeasible->id == "c");
    }
}

TEST_CASE("windows are empty exactly below the lower bound") {
    std::mt19937_64 rng(1717);
    for (int round = 0; round < 200; ++round) {
        const PreferenceProfile profile = random_profile(rng, 5, 4, 5);
        const int bound = lower_bound_k(profile);
        for (int k = 0; k <= 8; ++k)
            CHECK(cardinality_windows(profile, k).feasible() == (k >= bound));
    }
}

TEST_CASE("bounds sandwich the oracle minimum on small profiles") {
    const auto pool = all_orders(3, 3);
    int checked = 0;
    for_each_profile(3, 2, pool, [&](const PreferenceProfile& profile) {
        // Thin the sweep to keep the unit suite quick; acceptance covers all.
        if (++checked % 17 != 0)
            return;
        const int minimum = oracle_min_k(profile);
        CHECK(lower_bound_k(profile) <= minimum);
        CHECK(minimum <= upper_bound_k(profile));
    });
}

#include "doctest.h"

#include "bam/search.hpp"
#include "bam/twovoter.hpp"
#include "helpers.hpp"

using namespace bam;
using namespace bamtest;

TEST_CASE("value_computation on the worked example") {
    const auto profile = two_voter_worked_example();
    const TypeScores ts = value_computation(profile);
    CHECK(ts.m_u == 2);
    CHECK(ts.m_w == 0);
    CHECK(ts.m_uw == 2);
    CHECK(ts.k == 4);
    const int c1 = profile.alternative_index("c1");
    const int c3 = profile.alternative_index("c3");
    const int c4 = profile.alternative_index("c4");
    CHECK(ts.s_u[c3] == 2);
    CHECK(ts.s_uw[c4] == 1);
    CHECK(ts.s_uw[c1] == 2);
    CHECK(ts.s_u[c1] == 2);
}

TEST_CASE("value_computation on reversed complete orders") {
    const auto profile = make_profile(
        {"c1", "c2", "c3", "c4"},
        {{"u", {"c1", "c2", "c3", "c4"}}, {"w", {"c4", "c3", "c2", "c1"}}});
    const TypeScores ts = value_computation(profile);
    CHECK(ts.m_u == 3);
    CHECK(ts.m_w == 3);
    CHECK(ts.m_uw == 0);
    CHECK(ts.k == 6);
    CHECK(oracle_min_k(profile) == 6);
}

TEST_CASE("value_computation on identical pair orders") {
    const auto profile = make_profile({"a", "b"}, {{"u", {"a", "b"}}, {"w", {"a", "b"}}});
    const TypeScores ts = value_computation(profile);
    CHECK(ts.m_u == 0);
    CHECK(ts.m_w == 0);
    CHECK(ts.m_uw == 1);
    CHECK(ts.k == 1);
}

TEST_CASE("value_computation rejects other voter counts") {
    CHECK_THROWS_AS(value_computation(cycle_three()), PreconditionError);
}

TEST_CASE("min_k_two_voters") {
    SUBCASE("worked example model") {
        const auto profile = two_voter_worked_example();
        const TwoVoterResult result = min_k_two_voters(profile);
        CHECK(result.k == 4);
        CHECK(result.witness.cares("u") == AttrSet{1, 2, 3, 4});
        CHECK(result.witness.cares("w") == AttrSet{1, 2});
        CHECK(verify(profile, result.witness).ok);
    }
    SUBCASE("both orders empty") {
        const auto profile = make_profile({"a"}, {{"u", {}}, {"w", {}}});
        const TwoVoterResult result = min_k_two_voters(profile);
        CHECK(result.k == 0);
        CHECK(verify(profile, result.witness).ok);
    }
    SUBCASE("matches the oracle on random small profiles") {
        std::mt19937_64 rng(123);
        for (int round = 0; round < 40; ++round) {
            const PreferenceProfile profile = random_profile(rng, 4, 2, 3);
            const TwoVoterResult result = min_k_two_voters(profile);
            CHECK(verify(profile, result.witness).ok);
            CHECK(result.k == oracle_min_k(profile));
        }
    }
}

TEST_CASE("type scores are tight in the witness") {
    std::mt19937_64 rng(456);
    for (int round = 0; round < 100; ++round) {
        const PreferenceProfile profile = random_profile(rng, 5, 2, 5);
        const TwoVoterResult result = min_k_two_voters(profile);
        const RankView view = rank_view(profile);
        for (int v = 0; v < 2; ++v) {
            const auto& order = profile.order(v);
            for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
                const int expected = view.length[v] - pos - 1;
                CHECK(score(result.witness, profile.voter_name(v),
                            profile.alternative_name(order[pos])) == expected);
            }
        }
    }
}

TEST_CASE("type score invariants") {
    std::mt19937_64 rng(789);
    for (int round = 0; round < 200; ++round) {
        const PreferenceProfile profile = random_profile(rng, 6, 2, 6);
        const TypeScores ts = value_computation(profile);
        const RankView view = rank_view(profile);
        CHECK(ts.k == ts.m_u + ts.m_w + ts.m_uw);
        for (int c = 0; c < profile.num_alternatives(); ++c) {
            CHECK(ts.s_u[c] >= 0);
            CHECK(ts.s_u[c] <= ts.m_u);
            CHECK(ts.s_w[c] >= 0);
            CHECK(ts.s_w[c] <= ts.m_w);
            CHECK(ts.s_uw[c] >= 0);
            CHECK(ts.s_uw[c] <= ts.m_uw);
            if (view.ranks(0, c))
                CHECK(ts.s_u[c] + ts.s_uw[c] == ts.lambda_u[c]);
            if (view.ranks(1, c))
                CHECK(ts.s_w[c] + ts.s_uw[c] == ts.lambda_w[c]);
        }
    }
}

TEST_CASE("value_computation does linear work") {
    for (int m : {4, 8, 16, 32, 64}) {
        std::vector<std::vector<int>> orders(2);
        for (int i = 0; i < m; ++i) {
            orders[0].push_back(i);
            orders[1].push_back(m - 1 - i);
        }
        const PreferenceProfile profile = profile_from_orders(m, orders);
        const TypeScores ts = value_computation(profile);
        CHECK(ts.ops <= 4u * static_cast<unsigned>(m) + 4u);
    }
}

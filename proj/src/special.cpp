#include "bam/special.hpp"

#include <algorithm>
#include <chrono>

namespace bam {

RankConsistencyTable rank_consistency(const PreferenceProfile& profile) {
    RankConsistencyTable table;
    table.ranks.assign(profile.num_alternatives(), {});
    for (const auto& order : profile.orders()) {
        if (order.size() < 2)
            continue;
        for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
            auto& ranks = table.ranks[order[pos]];
            if (std::find(ranks.begin(), ranks.end(), pos) == ranks.end())
                ranks.push_back(pos);
        }
    }
    for (auto& ranks : table.ranks) {
        std::sort(ranks.begin(), ranks.end());
        if (ranks.size() > 1)
            table.consistent = false;
    }
    return table;
}

SolveOutcome uniform_length_solve(const PreferenceProfile& profile, int k) {
    if (k < 0)
        throw PreconditionError("uniform_length_solve: k must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    auto timed = [&](SolveOutcome outcome) {
        outcome.stats.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return outcome;
    };
    for (int v = 0; v < profile.num_voters(); ++v) {
        const int len = static_cast<int>(profile.order(v).size());
        if (len >= 2 && len != k + 1)
            throw PreconditionError("uniform_length_solve: order of voter '" +
                                    profile.voter_name(v) + "' has length " +
                                    std::to_string(len) + ", expected " + std::to_string(k + 1));
    }

    const RankConsistencyTable table = rank_consistency(profile);
    if (!table.consistent) {
        for (int c = 0; c < profile.num_alternatives(); ++c) {
            if (table.ranks[c].size() > 1)
                return timed(SolveOutcome::no("alternative '" + profile.alternative_name(c) +
                                              "' occupies multiple ranks"));
        }
    }

    AttributeModel model;
    model.k = k;
    AttrSet all;
    for (int i = 1; i <= k; ++i)
        all.push_back(i);
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        if (table.ranks[c].empty()) {
            model.set_has(profile.alternative_name(c), {});
        } else {
            const int rank = table.ranks[c].front();
            model.set_has(profile.alternative_name(c), AttrSet(all.begin(), all.begin() + (k - rank)));
        }
    }
    for (int v = 0; v < profile.num_voters(); ++v) {
        const bool constraining = profile.order(v).size() >= 2;
        model.set_cares(profile.voter_name(v), constraining ? all : AttrSet{});
    }
    return timed(SolveOutcome::with(std::move(model)));
}

} // namespace bam

#pragma once

#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

// Ranks each alternative occupies across all constraining orders (length >= 2).
// Consistent iff no alternative occupies two different ranks.
struct RankConsistencyTable {
    std::vector<std::vector<int>> ranks; // [alternative] -> distinct ranks, ascending
    bool consistent = true;
};

RankConsistencyTable rank_consistency(const PreferenceProfile& profile);

// Uniform-length case: every constraining order has length exactly k+1.
// YES iff the rank table is consistent; the witness gives every constraining
// voter all k attributes and each ranked alternative the first k - rank(c)
// attribute indices (only the count matters, not which attributes).
SolveOutcome uniform_length_solve(const PreferenceProfile& profile, int k);

} // namespace bam

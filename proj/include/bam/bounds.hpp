#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

// Per-voter and per-alternative cardinality windows at a fixed k:
//   |cares(v)| >= |order_v| - 1
//   |order_v| - rank_v(c) - 1 <= |has(c)| <= k - rank_v(c)
// Has-windows are intersected across all voters ranking the alternative.
struct CardinalityWindows {
    struct Infeasibility {
        enum class Kind { Voter, Alternative } kind;
        std::string id;
    };

    int k = 0;
    std::vector<int> min_cares;             // [voter]
    std::vector<int> has_low;               // [alternative]; 0 if unranked
    std::vector<int> has_high;              // [alternative]; k if unranked
    std::optional<Infeasibility> infeasible; // set iff some window is empty

    bool feasible() const { return !infeasible.has_value(); }
};

// Largest lower bound on k obtainable from the cardinality and rank-distance
// arguments. Sound (never exceeds the true minimum) but not tight.
int lower_bound_k(const PreferenceProfile& profile);

// min((m-1)*m, (m-1)*n); a model of that size always exists. 0 when m <= 1.
int upper_bound_k(const PreferenceProfile& profile);

// The private-attribute construction witnessing the (m-1)*m upper bound:
// each alternative owns m-1 attributes nobody else has, and each voter cares
// about exactly enough of them to realize its ranks. Always verifies.
AttributeModel trivial_bam(const PreferenceProfile& profile);

CardinalityWindows cardinality_windows(const PreferenceProfile& profile, int k);

} // namespace bam

#pragma once

#include <cstdint>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

// Per-alternative attribute-type counts for the two-voter case. Three types
// exist: cared about by the first voter only (u), the second only (w), or
// both (uw). s_* are the final per-type counts, k = m_u + m_w + m_uw.
struct TypeScores {
    std::vector<int> lambda_u, lambda_w; // required score, 0 if unranked
    std::vector<int> t_u, t_w, t_uw;     // intermediaries (both-ranked alternatives)
    std::vector<int> conv;
    std::vector<int> s_u, s_w, s_uw;
    int m_u = 0, m_w = 0, m_uw = 0;
    int k = 0;
    std::uint64_t ops = 0; // loop-iteration counter, used to assert O(m) behaviour
};

// One-pass computation of the minimum attribute counts per type (exact for
// n = 2). Throws PreconditionError unless the profile has exactly two voters.
TypeScores value_computation(const PreferenceProfile& profile);

struct TwoVoterResult {
    int k = 0;
    AttributeModel witness;
    TypeScores scores;
};

// Exact minimum k for two voters plus a witness. Attribute layout: the uw
// attributes come first (1..m_uw), then the u-only block, then the w-only
// block; within a type each alternative takes a prefix.
TwoVoterResult min_k_two_voters(const PreferenceProfile& profile);

} // namespace bam

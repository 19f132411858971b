#pragma once

#include <cstdint>
#include <optional>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

struct SearchConfig {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::uint64_t> time_limit_ms;
    bool symmetry_breaking = true;
    bool oracle_mode = false; // route dfs_solve through the literal brute force
    int threads = 1;          // oracle outer-loop partitioning; 1 = deterministic
};

// Literal brute force: answer YES outright when k >= m(m-1) (the trivial
// construction applies), otherwise enumerate every has-assignment and, per
// voter, every cares-subset, accepting the first that explains the order.
// Exact; serves as the ground-truth oracle for every other solver.
SolveOutcome oracle_solve(const PreferenceProfile& profile, int k, const SearchConfig& cfg = {});

// Complete refinement of the brute force: alternatives are assigned
// has-subsets one at a time (most-constrained first) with cardinality-window
// filtering, per-voter feasibility checks on the assigned suborder, and
// lexicographic column symmetry breaking. Decision-equal to oracle_solve.
SolveOutcome dfs_solve(const PreferenceProfile& profile, int k, const SearchConfig& cfg = {});

struct MinKResult {
    int k = 0;
    AttributeModel witness;
    SearchStats stats;
};

// Minimum k admitting a model, with witness. Dispatch: two voters go to the
// exact linear algorithm, uniform-length profiles try the rank-consistency
// rule at k = length-1, everything else iterates dfs_solve upward from the
// lower bound (termination is guaranteed by the trivial upper bound).
MinKResult solve_min_k(const PreferenceProfile& profile, const SearchConfig& cfg = {});

} // namespace bam

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

// Attributes grouped by signature: the set of voters caring about them
// (cares given) or the set of order positions of alternatives having them
// (has given, single voter). Attributes sharing a signature are
// interchangeable, so solvers only count per type.
struct AttributeTypeTable {
    enum class Kind { Voters, OrderPositions };

    struct Entry {
        std::vector<int> signature;  // member indices, ascending, non-empty
        std::vector<int> attributes; // attribute indices of this type, ascending
    };

    Kind kind = Kind::Voters;
    int k = 0;
    std::vector<Entry> entries;
};

AttributeTypeTable attribute_types_from_cares(const PreferenceProfile& profile,
                                              const std::unordered_map<std::string, AttrSet>& cares,
                                              int k);

// Signatures over positions 0..order length-1.
AttributeTypeTable attribute_types_from_has(const std::vector<AttrSet>& has_along_order, int k);

// A bounded-integer feasibility system: every variable i ranges over
// [0, domain_hi[i]]; every constraint reads sum(plus) - sum(minus) >= 1.
struct LinearConstraint {
    std::vector<int> plus;
    std::vector<int> minus;
};

struct CountingSystem {
    std::vector<int> domain_hi;
    std::vector<LinearConstraint> constraints;
};

struct CountingResult {
    bool feasible = false;
    std::vector<int> assignment; // valid iff feasible
    std::uint64_t nodes = 0;
};

// Complete decision by DFS with interval propagation: each constraint
// tightens variable domains against the best the other terms can do,
// branching picks the smallest remaining domain and tries large values
// first.
CountingResult counting_feasibility(const CountingSystem& system);

enum class HasMode { Enumerate, Typed };

struct SingleVoterResult {
    bool feasible = false;
    std::optional<AttrSet> cares;
};

// Does some cares-set yield strictly decreasing scores along one order whose
// has-sets are fixed? Enumerate tests all 2^k subsets (first hit wins);
// Typed solves the per-type counting system and materializes a prefix of
// each type.
SingleVoterResult solve_has_single_voter(const std::vector<AttrSet>& has_along_order, int k,
                                         HasMode mode);

// Mask-level core of the Enumerate mode, shared with the search module's
// per-voter pruning. Returns the first cares mask that works, if any.
std::optional<std::uint64_t> first_feasible_cares_mask(const std::vector<std::uint64_t>& has_along_order,
                                                       int k);

// BAM with Cares: find a has-function completing a k-BAM. Counting route.
SolveOutcome solve_cares_given(const PreferenceProfile& profile,
                               const std::unordered_map<std::string, AttrSet>& cares, int k);

// Reference enumerator over all (2^k)^m has-functions; exact but only
// sensible for tiny k*m (cross-checks the counting route in tests).
SolveOutcome cares_given_enumerate(const PreferenceProfile& profile,
                                   const std::unordered_map<std::string, AttrSet>& cares, int k);

// BAM with Has: voters are independent; solve each order separately.
// Enumerate mode below the threshold, typed counting above it.
SolveOutcome solve_has_given(const PreferenceProfile& profile,
                             const std::unordered_map<std::string, AttrSet>& has, int k,
                             int enumeration_threshold = 20);

} // namespace bam

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bam/profile.hpp"

namespace bam {

// An attribute subset: 1-based indices, sorted ascending, no repeats.
using AttrSet = std::vector<int>;

// Sorts, dedups and range-checks a raw attribute list against [1, k].
AttrSet normalize_attr_set(std::vector<int> attrs, int k);

// A Boolean attribute model: k attributes (canonically named 1..k), a
// has-set per alternative and a cares-set per voter. Entries keep their
// insertion order so serialization is deterministic.
class AttributeModel {
public:
    int k = 0;

    void set_has(const std::string& alt, AttrSet attrs);
    void set_cares(const std::string& voter, AttrSet attrs);

    const AttrSet* find_has(const std::string& alt) const;
    const AttrSet* find_cares(const std::string& voter) const;

    // Throwing lookups, used by score/verify.
    const AttrSet& has(const std::string& alt) const;
    const AttrSet& cares(const std::string& voter) const;

    const std::vector<std::pair<std::string, AttrSet>>& has_entries() const { return has_entries_; }
    const std::vector<std::pair<std::string, AttrSet>>& cares_entries() const { return cares_entries_; }

private:
    std::vector<std::pair<std::string, AttrSet>> has_entries_;
    std::vector<std::pair<std::string, AttrSet>> cares_entries_;
    std::unordered_map<std::string, std::size_t> has_index_;
    std::unordered_map<std::string, std::size_t> cares_index_;
};

// |has(alt) ∩ cares(voter)|.
int score(const AttributeModel& model, const std::string& voter, const std::string& alt);

struct Violation {
    std::string voter;
    std::string preferred; // ranked directly above `other` by `voter`
    std::string other;
};

struct VerifyResult {
    bool ok = false;
    std::optional<Violation> violation; // first violating adjacent pair, in voter order

    explicit operator bool() const { return ok; }
};

// True iff scores strictly decrease along every voter's order. Adjacent
// pairs suffice: integer scores decrease along an order iff they decrease
// between neighbours. Model entries missing for a profile identifier count
// as empty sets; model entries naming identifiers outside the profile are a
// lookup error.
VerifyResult verify(const PreferenceProfile& profile, const AttributeModel& model);

struct SearchStats {
    std::uint64_t nodes = 0;
    double time_ms = 0.0;
};

struct SolveOutcome {
    bool yes = false;
    std::optional<AttributeModel> witness; // present iff yes
    SearchStats stats;
    std::string reason; // optional short justification for a NO

    static SolveOutcome no(std::string why = "") {
        SolveOutcome o;
        o.reason = std::move(why);
        return o;
    }
    static SolveOutcome with(AttributeModel model) {
        SolveOutcome o;
        o.yes = true;
        o.witness = std::move(model);
        return o;
    }
};

// A complete all-empty model covering the profile (the k=0 witness shape).
AttributeModel empty_model(const PreferenceProfile& profile, int k = 0);

} // namespace bam

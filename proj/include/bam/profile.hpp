#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bam/errors.hpp"

namespace bam {

// A preference profile: alternatives, voters, and one strict (possibly
// incomplete) order per voter, most-preferred first. Immutable after
// construction; all solvers share profiles read-only.
class PreferenceProfile {
public:
    PreferenceProfile() = default;

    // Orders are given as alternative identifiers; every identifier must be
    // declared in `alternatives` and may appear at most once per order.
    PreferenceProfile(std::vector<std::string> alternatives,
                      std::vector<std::string> voters,
                      std::vector<std::vector<std::string>> orders);

    int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
    int num_voters() const { return static_cast<int>(voters_.size()); }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<std::string>& voters() const { return voters_; }

    const std::string& alternative_name(int index) const { return alternatives_.at(index); }
    const std::string& voter_name(int index) const { return voters_.at(index); }

    int alternative_index(const std::string& id) const;
    int voter_index(const std::string& id) const;
    bool has_alternative(const std::string& id) const { return alt_index_.count(id) != 0; }
    bool has_voter(const std::string& id) const { return voter_index_.count(id) != 0; }

    // Order of a voter as alternative indices, most-preferred first.
    const std::vector<int>& order(int voter_index) const { return orders_.at(voter_index); }
    const std::vector<std::vector<int>>& orders() const { return orders_; }

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> voters_;
    std::vector<std::vector<int>> orders_;
    std::unordered_map<std::string, int> alt_index_;
    std::unordered_map<std::string, int> voter_index_;
};

// Ranks per (voter, alternative): rank is the number of alternatives the
// voter prefers to it, -1 for unranked. lengths[v] == |order of v|.
struct RankView {
    std::vector<std::vector<int>> rank; // [voter][alternative], -1 if unranked
    std::vector<int> length;            // [voter]

    bool ranks(int voter, int alt) const { return rank[voter][alt] >= 0; }
};

RankView rank_view(const PreferenceProfile& profile);

} // namespace bam

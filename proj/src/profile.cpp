#include "bam/profile.hpp"

#include <unordered_set>

namespace bam {

PreferenceProfile::PreferenceProfile(std::vector<std::string> alternatives,
                                     std::vector<std::string> voters,
                                     std::vector<std::vector<std::string>> orders)
    : alternatives_(std::move(alternatives)), voters_(std::move(voters)) {
    if (orders.size() != voters_.size())
        throw InputError("profile: expected one order per voter");
    for (int i = 0; i < static_cast<int>(alternatives_.size()); ++i) {
        if (!alt_index_.emplace(alternatives_[i], i).second)
            throw InputError("profile: duplicate alternative '" + alternatives_[i] + "'");
    }
    for (int i = 0; i < static_cast<int>(voters_.size()); ++i) {
        if (!voter_index_.emplace(voters_[i], i).second)
            throw InputError("profile: duplicate voter '" + voters_[i] + "'");
    }
    orders_.reserve(orders.size());
    for (std::size_t v = 0; v < orders.size(); ++v) {
        std::vector<int> order;
        order.reserve(orders[v].size());
        std::unordered_set<int> seen;
        for (const std::string& id : orders[v]) {
            auto it = alt_index_.find(id);
            if (it == alt_index_.end())
                throw InputError("profile: order of voter '" + voters_[v] +
                                 "' mentions unknown alternative '" + id + "'");
            if (!seen.insert(it->second).second)
                throw InputError("profile: order of voter '" + voters_[v] +
                                 "' ranks alternative '" + id + "' twice");
            order.push_back(it->second);
        }
        orders_.push_back(std::move(order));
    }
}

int PreferenceProfile::alternative_index(const std::string& id) const {
    auto it = alt_index_.find(id);
    if (it == alt_index_.end())
        throw LookupError("unknown alternative '" + id + "'");
    return it->second;
}

int PreferenceProfile::voter_index(const std::string& id) const {
    auto it = voter_index_.find(id);
    if (it == voter_index_.end())
        throw LookupError("unknown voter '" + id + "'");
    return it->second;
}

RankView rank_view(const PreferenceProfile& profile) {
    RankView view;
    const int n = profile.num_voters();
    const int m = profile.num_alternatives();
    view.rank.assign(n, std::vector<int>(m, -1));
    view.length.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const auto& order = profile.order(v);
        view.length[v] = static_cast<int>(order.size());
        for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
            view.rank[v][order[pos]] = pos;
    }
    return view;
}

} // namespace bam

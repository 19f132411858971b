#include "bam/model.hpp"

#include <algorithm>

namespace bam {

AttrSet normalize_attr_set(std::vector<int> attrs, int k) {
    std::sort(attrs.begin(), attrs.end());
    attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
    for (int a : attrs) {
        if (a < 1 || a > k)
            throw InputError("attribute index " + std::to_string(a) + " outside 1.." +
                             std::to_string(k));
    }
    return attrs;
}

void AttributeModel::set_has(const std::string& alt, AttrSet attrs) {
    auto it = has_index_.find(alt);
    if (it != has_index_.end()) {
        has_entries_[it->second].second = std::move(attrs);
        return;
    }
    has_index_.emplace(alt, has_entries_.size());
    has_entries_.emplace_back(alt, std::move(attrs));
}

void AttributeModel::set_cares(const std::string& voter, AttrSet attrs) {
    auto it = cares_index_.find(voter);
    if (it != cares_index_.end()) {
        cares_entries_[it->second].second = std::move(attrs);
        return;
    }
    cares_index_.emplace(voter, cares_entries_.size());
    cares_entries_.emplace_back(voter, std::move(attrs));
}

const AttrSet* AttributeModel::find_has(const std::string& alt) const {
    auto it = has_index_.find(alt);
    return it == has_index_.end() ? nullptr : &has_entries_[it->second].second;
}

const AttrSet* AttributeModel::find_cares(const std::string& voter) const {
    auto it = cares_index_.find(voter);
    return it == cares_index_.end() ? nullptr : &cares_entries_[it->second].second;
}

const AttrSet& AttributeModel::has(const std::string& alt) const {
    const AttrSet* s = find_has(alt);
    if (!s)
        throw LookupError("model has no has-entry for alternative '" + alt + "'");
    return *s;
}

const AttrSet& AttributeModel::cares(const std::string& voter) const {
    const AttrSet* s = find_cares(voter);
    if (!s)
        throw LookupError("model has no cares-entry for voter '" + voter + "'");
    return *s;
}

namespace {

int intersection_size(const AttrSet& a, const AttrSet& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            ++count, ++ia, ++ib;
    }
    return count;
}

} // namespace

int score(const AttributeModel& model, const std::string& voter, const std::string& alt) {
    return intersection_size(model.has(alt), model.cares(voter));
}

VerifyResult verify(const PreferenceProfile& profile, const AttributeModel& model) {
    for (const auto& [id, attrs] : model.has_entries()) {
        (void)attrs;
        if (!profile.has_alternative(id))
            throw LookupError("model names alternative '" + id + "' not in the profile");
    }
    for (const auto& [id, attrs] : model.cares_entries()) {
        (void)attrs;
        if (!profile.has_voter(id))
            throw LookupError("model names voter '" + id + "' not in the profile");
    }

    static const AttrSet kEmpty;
    auto has_of = [&](int alt) -> const AttrSet& {
        const AttrSet* s = model.find_has(profile.alternative_name(alt));
        return s ? *s : kEmpty;
    };

    VerifyResult result;
    result.ok = true;
    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        if (order.size() < 2)
            continue;
        const AttrSet* cares = model.find_cares(profile.voter_name(v));
        const AttrSet& cares_set = cares ? *cares : kEmpty;
        int prev = intersection_size(has_of(order[0]), cares_set);
        for (std::size_t i = 1; i < order.size(); ++i) {
            int cur = intersection_size(has_of(order[i]), cares_set);
            if (prev <= cur) {
                result.ok = false;
                result.violation = Violation{profile.voter_name(v),
                                             profile.alternative_name(order[i - 1]),
                                             profile.alternative_name(order[i])};
                return result;
            }
            prev = cur;
        }
    }
    return result;
}

AttributeModel empty_model(const PreferenceProfile& profile, int k) {
    AttributeModel model;
    model.k = k;
    for (const auto& alt : profile.alternatives())
        model.set_has(alt, {});
    for (const auto& voter : profile.voters())
        model.set_cares(voter, {});
    return model;
}

} // namespace bam

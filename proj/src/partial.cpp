#include "bam/partial.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

namespace bam {

namespace {

struct OutcomeTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    SolveOutcome operator()(SolveOutcome outcome) const {
        outcome.stats.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return outcome;
    }
};

std::uint64_t attrs_to_mask(const AttrSet& attrs, int k) {
    if (k > 63)
        throw ResourceLimitError("attribute masks support at most 63 attributes");
    std::uint64_t mask = 0;
    for (int a : attrs)
        mask |= std::uint64_t{1} << (a - 1);
    return mask;
}

AttrSet mask_to_attrs(std::uint64_t mask) {
    AttrSet attrs;
    while (mask) {
        const int bit = std::countr_zero(mask);
        attrs.push_back(bit + 1);
        mask &= mask - 1;
    }
    return attrs;
}

// Completes a partial id->set map against a declared id list: unknown ids
// are rejected, omitted ids mean the empty set.
std::vector<AttrSet> complete_map(const std::unordered_map<std::string, AttrSet>& given,
                                  const std::vector<std::string>& ids, int k,
                                  const char* what) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        index.emplace(ids[i], i);
    std::vector<AttrSet> out(ids.size());
    for (const auto& [id, attrs] : given) {
        auto it = index.find(id);
        if (it == index.end())
            throw LookupError(std::string(what) + " names unknown identifier '" + id + "'");
        out[it->second] = normalize_attr_set(attrs, k);
    }
    return out;
}

} // namespace

AttributeTypeTable attribute_types_from_cares(const PreferenceProfile& profile,
                                              const std::unordered_map<std::string, AttrSet>& cares,
                                              int k) {
    const std::vector<AttrSet> cares_by_voter = complete_map(cares, profile.voters(), k, "cares");
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int attr = 1; attr <= k; ++attr) {
        std::vector<int> signature;
        for (int v = 0; v < profile.num_voters(); ++v) {
            if (std::binary_search(cares_by_voter[v].begin(), cares_by_voter[v].end(), attr))
                signature.push_back(v);
        }
        if (!signature.empty())
            groups[std::move(signature)].push_back(attr);
    }
    AttributeTypeTable table;
    table.kind = AttributeTypeTable::Kind::Voters;
    table.k = k;
    for (auto& [signature, attrs] : groups)
        table.entries.push_back({signature, std::move(attrs)});
    return table;
}

AttributeTypeTable attribute_types_from_has(const std::vector<AttrSet>& has_along_order, int k) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int attr = 1; attr <= k; ++attr) {
        std::vector<int> signature;
        for (int pos = 0; pos < static_cast<int>(has_along_order.size()); ++pos) {
            if (std::binary_search(has_along_order[pos].begin(), has_along_order[pos].end(), attr))
                signature.push_back(pos);
        }
        if (!signature.empty())
            groups[std::move(signature)].push_back(attr);
    }
    AttributeTypeTable table;
    table.kind = AttributeTypeTable::Kind::OrderPositions;
    table.k = k;
    for (auto& [signature, attrs] : groups)
        table.entries.push_back({signature, std::move(attrs)});
    return table;
}

namespace {

struct Domains {
    std::vector<int> lo, hi;
};

// One propagation pass; returns false on a wiped-out domain.
bool propagate(const CountingSystem& system, Domains& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& con : system.constraints) {
            long long max_lhs = 0;
            for (int p : con.plus)
                max_lhs += d.hi[p];
            for (int q : con.minus)
                max_lhs -= d.lo[q];
            if (max_lhs < 1)
                return false;
            for (int p : con.plus) {
                const long long need = 1 - (max_lhs - d.hi[p]);
                if (need > d.lo[p]) {
                    if (need > d.hi[p])
                        return false;
                    d.lo[p] = static_cast<int>(need);
                    changed = true;
                }
            }
            for (int q : con.minus) {
                const long long cap = max_lhs + d.lo[q] - 1;
                if (cap < d.hi[q]) {
                    if (cap < d.lo[q])
                        return false;
                    d.hi[q] = static_cast<int>(cap);
                    changed = true;
                }
            }
        }
    }
    return true;
}

bool search(const CountingSystem& system, Domains d, std::vector<int>& out,
            std::uint64_t& nodes) {
    ++nodes;
    if (!propagate(system, d))
        return false;
    int pick = -1, best = 0;
    for (int i = 0; i < static_cast<int>(d.lo.size()); ++i) {
        const int width = d.hi[i] - d.lo[i];
        if (width > 0 && (pick == -1 || width < best)) {
            pick = i;
            best = width;
        }
    }
    if (pick == -1) {
        out = d.lo;
        return true;
    }
    for (int value = d.hi[pick]; value >= d.lo[pick]; --value) {
        Domains child = d;
        child.lo[pick] = child.hi[pick] = value;
        if (search(system, std::move(child), out, nodes))
            return true;
    }
    return false;
}

} // namespace

CountingResult counting_feasibility(const CountingSystem& system) {
    CountingResult result;
    Domains d;
    d.lo.assign(system.domain_hi.size(), 0);
    d.hi = system.domain_hi;
    result.feasible = search(system, std::move(d), result.assignment, result.nodes);
    return result;
}

std::optional<std::uint64_t> first_feasible_cares_mask(const std::vector<std::uint64_t>& has_along_order,
                                                       int k) {
    if (k > 30)
        throw ResourceLimitError("cares enumeration limited to k <= 30");
    if (has_along_order.size() <= 1)
        return 0;
    // A pair with has(a_i) subseteq has(a_{i+1}) cannot be separated by any
    // cares-set, and the smallest feasible mask only uses attributes from the
    // union of the has-sets; ascending submask enumeration preserves the
    // "first subset in ascending order" contract of the plain 2^k scan.
    std::uint64_t universe = 0;
    for (std::size_t i = 0; i + 1 < has_along_order.size(); ++i) {
        if ((has_along_order[i] & ~has_along_order[i + 1]) == 0)
            return std::nullopt;
    }
    for (std::uint64_t mask : has_along_order)
        universe |= mask;
    std::uint64_t cares = 0;
    while (true) {
        int prev = std::popcount(has_along_order[0] & cares);
        bool ok = true;
        for (std::size_t i = 1; i < has_along_order.size(); ++i) {
            const int cur = std::popcount(has_along_order[i] & cares);
            if (prev <= cur) {
                ok = false;
                break;
            }
            prev = cur;
        }
        if (ok)
            return cares;
        if (cares == universe)
            return std::nullopt;
        cares = (cares - universe) & universe;
    }
}

SingleVoterResult solve_has_single_voter(const std::vector<AttrSet>& has_along_order, int k,
                                         HasMode mode) {
    SingleVoterResult result;
    if (has_along_order.size() <= 1) {
        result.feasible = true;
        result.cares = AttrSet{};
        return result;
    }
    if (mode == HasMode::Enumerate) {
        std::vector<std::uint64_t> masks;
        masks.reserve(has_along_order.size());
        for (const AttrSet& s : has_along_order)
            masks.push_back(attrs_to_mask(s, k));
        if (auto mask = first_feasible_cares_mask(masks, k)) {
            result.feasible = true;
            result.cares = mask_to_attrs(*mask);
        }
        return result;
    }

    const AttributeTypeTable table = attribute_types_from_has(has_along_order, k);
    CountingSystem system;
    system.domain_hi.reserve(table.entries.size());
    for (const auto& entry : table.entries)
        system.domain_hi.push_back(static_cast<int>(entry.attributes.size()));
    const int len = static_cast<int>(has_along_order.size());
    for (int i = 0; i + 1 < len; ++i) {
        LinearConstraint con;
        for (int t = 0; t < static_cast<int>(table.entries.size()); ++t) {
            const auto& sig = table.entries[t].signature;
            const bool in_cur = std::binary_search(sig.begin(), sig.end(), i);
            const bool in_next = std::binary_search(sig.begin(), sig.end(), i + 1);
            if (in_cur && !in_next)
                con.plus.push_back(t);
            else if (in_next && !in_cur)
                con.minus.push_back(t);
        }
        system.constraints.push_back(std::move(con));
    }
    const CountingResult counts = counting_feasibility(system);
    if (!counts.feasible)
        return result;
    AttrSet cares;
    for (int t = 0; t < static_cast<int>(table.entries.size()); ++t) {
        const auto& attrs = table.entries[t].attributes;
        cares.insert(cares.end(), attrs.begin(), attrs.begin() + counts.assignment[t]);
    }
    result.feasible = true;
    result.cares = normalize_attr_set(std::move(cares), k);
    return result;
}

SolveOutcome solve_cares_given(const PreferenceProfile& profile,
                               const std::unordered_map<std::string, AttrSet>& cares, int k) {
    if (k < 0)
        throw InputError("solve_cares_given: k must be non-negative");
    const OutcomeTimer timed;
    const std::vector<AttrSet> cares_by_voter = complete_map(cares, profile.voters(), k, "cares");
    const AttributeTypeTable table = attribute_types_from_cares(profile, cares, k);

    // Variables only for alternatives that appear in some order.
    std::vector<int> ranked(profile.num_alternatives(), -1);
    std::vector<int> ranked_alts;
    for (const auto& order : profile.orders()) {
        for (int alt : order) {
            if (ranked[alt] == -1) {
                ranked[alt] = static_cast<int>(ranked_alts.size());
                ranked_alts.push_back(alt);
            }
        }
    }
    const int num_types = static_cast<int>(table.entries.size());
    auto var_of = [&](int type, int alt) { return type * static_cast<int>(ranked_alts.size()) + ranked[alt]; };

    CountingSystem system;
    system.domain_hi.assign(num_types * ranked_alts.size(), 0);
    for (int t = 0; t < num_types; ++t) {
        for (std::size_t r = 0; r < ranked_alts.size(); ++r)
            system.domain_hi[t * ranked_alts.size() + r] =
                static_cast<int>(table.entries[t].attributes.size());
    }
    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        if (order.size() < 2)
            continue;
        std::vector<int> voter_types;
        for (int t = 0; t < num_types; ++t) {
            const auto& sig = table.entries[t].signature;
            if (std::binary_search(sig.begin(), sig.end(), v))
                voter_types.push_back(t);
        }
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            LinearConstraint con;
            for (int t : voter_types) {
                con.plus.push_back(var_of(t, order[i]));
                con.minus.push_back(var_of(t, order[i + 1]));
            }
            system.constraints.push_back(std::move(con));
        }
    }

    const CountingResult counts = counting_feasibility(system);
    SolveOutcome outcome;
    outcome.stats.nodes = counts.nodes;
    if (!counts.feasible) {
        outcome.reason = "no has-function completes the given cares";
        return timed(std::move(outcome));
    }

    AttributeModel model;
    model.k = k;
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        AttrSet attrs;
        if (ranked[c] != -1) {
            for (int t = 0; t < num_types; ++t) {
                const auto& pool = table.entries[t].attributes;
                const int take = counts.assignment[var_of(t, c)];
                attrs.insert(attrs.end(), pool.begin(), pool.begin() + take);
            }
        }
        model.set_has(profile.alternative_name(c), normalize_attr_set(std::move(attrs), k));
    }
    for (int v = 0; v < profile.num_voters(); ++v)
        model.set_cares(profile.voter_name(v), cares_by_voter[v]);
    outcome.yes = true;
    outcome.witness = std::move(model);
    return timed(std::move(outcome));
}

SolveOutcome cares_given_enumerate(const PreferenceProfile& profile,
                                   const std::unordered_map<std::string, AttrSet>& cares, int k) {
    if (k < 0)
        throw InputError("cares_given_enumerate: k must be non-negative");
    const OutcomeTimer timed;
    const std::vector<AttrSet> cares_by_voter = complete_map(cares, profile.voters(), k, "cares");

    std::vector<int> ranked_alts;
    {
        std::vector<bool> seen(profile.num_alternatives(), false);
        for (const auto& order : profile.orders())
            for (int alt : order)
                if (!seen[alt]) {
                    seen[alt] = true;
                    ranked_alts.push_back(alt);
                }
    }
    const int m = static_cast<int>(ranked_alts.size());
    if (static_cast<long long>(k) * m > 26)
        throw ResourceLimitError("cares_given_enumerate: 2^(k*m) search space too large");

    std::vector<std::uint64_t> cares_mask(profile.num_voters());
    for (int v = 0; v < profile.num_voters(); ++v)
        cares_mask[v] = attrs_to_mask(cares_by_voter[v], k);

    std::vector<int> pos_of(profile.num_alternatives(), -1);
    for (int i = 0; i < m; ++i)
        pos_of[ranked_alts[i]] = i;

    const std::uint64_t per_alt = std::uint64_t{1} << k;
    std::vector<std::uint64_t> has(m, 0);
    SolveOutcome outcome;
    bool done = m == 0;
    while (true) {
        ++outcome.stats.nodes;
        bool all_ok = true;
        for (int v = 0; v < profile.num_voters() && all_ok; ++v) {
            const auto& order = profile.order(v);
            if (order.size() < 2)
                continue;
            int prev = std::popcount(has[pos_of[order[0]]] & cares_mask[v]);
            for (std::size_t i = 1; i < order.size(); ++i) {
                const int cur = std::popcount(has[pos_of[order[i]]] & cares_mask[v]);
                if (prev <= cur) {
                    all_ok = false;
                    break;
                }
                prev = cur;
            }
        }
        if (all_ok) {
            AttributeModel model;
            model.k = k;
            for (int c = 0; c < profile.num_alternatives(); ++c)
                model.set_has(profile.alternative_name(c),
                              pos_of[c] == -1 ? AttrSet{} : mask_to_attrs(has[pos_of[c]]));
            for (int v = 0; v < profile.num_voters(); ++v)
                model.set_cares(profile.voter_name(v), cares_by_voter[v]);
            outcome.yes = true;
            outcome.witness = std::move(model);
            return timed(std::move(outcome));
        }
        if (done)
            break;
        // Odometer, last alternative varies fastest.
        int digit = m - 1;
        while (digit >= 0) {
            if (++has[digit] < per_alt)
                break;
            has[digit] = 0;
            --digit;
        }
        if (digit < 0)
            break;
    }
    outcome.reason = "no has-function completes the given cares";
    return timed(std::move(outcome));
}

SolveOutcome solve_has_given(const PreferenceProfile& profile,
                             const std::unordered_map<std::string, AttrSet>& has, int k,
                             int enumeration_threshold) {
    if (k < 0)
        throw InputError("solve_has_given: k must be non-negative");
    const OutcomeTimer timed;
    const std::vector<AttrSet> has_by_alt = complete_map(has, profile.alternatives(), k, "has");
    const HasMode mode = k <= enumeration_threshold ? HasMode::Enumerate : HasMode::Typed;

    AttributeModel model;
    model.k = k;
    for (int c = 0; c < profile.num_alternatives(); ++c)
        model.set_has(profile.alternative_name(c), has_by_alt[c]);

    SolveOutcome outcome;
    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        if (order.size() < 2) {
            model.set_cares(profile.voter_name(v), {});
            continue;
        }
        std::vector<AttrSet> along;
        along.reserve(order.size());
        for (int alt : order)
            along.push_back(has_by_alt[alt]);
        const SingleVoterResult single = solve_has_single_voter(along, k, mode);
        if (!single.feasible) {
            outcome.reason = "no cares-set explains voter '" + profile.voter_name(v) + "'";
            return timed(std::move(outcome));
        }
        model.set_cares(profile.voter_name(v), *single.cares);
    }
    outcome.yes = true;
    outcome.witness = std::move(model);
    return timed(std::move(outcome));
}

} // namespace bam

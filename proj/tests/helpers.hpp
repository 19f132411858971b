#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"
#include "bam/reductions.hpp"
#include "bam/search.hpp"

namespace bamtest {

inline bam::PreferenceProfile make_profile(
    std::vector<std::string> alternatives,
    std::vector<std::pair<std::string, std::vector<std::string>>> voters) {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> orders;
    for (auto& [name, order] : voters) {
        names.push_back(name);
        orders.push_back(order);
    }
    return bam::PreferenceProfile(std::move(alternatives), std::move(names), std::move(orders));
}

inline std::vector<std::string> letter_alternatives(int m) {
    std::vector<std::string> alts;
    for (int i = 0; i < m; ++i)
        alts.push_back(std::string(1, static_cast<char>('a' + i)));
    return alts;
}

// All sequences of distinct indices from [0, m) with length 0..maxlen.
inline std::vector<std::vector<int>> all_orders(int m, int maxlen) {
    std::vector<std::vector<int>> result = {{}};
    std::vector<std::vector<int>> frontier = {{}};
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : frontier) {
            for (int c = 0; c < m; ++c) {
                if (std::find(prefix.begin(), prefix.end(), c) != prefix.end())
                    continue;
                auto extended = prefix;
                extended.push_back(c);
                result.push_back(extended);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return result;
}

inline bam::PreferenceProfile profile_from_orders(int m, const std::vector<std::vector<int>>& orders) {
    const auto alts = letter_alternatives(m);
    std::vector<std::string> voters;
    std::vector<std::vector<std::string>> named_orders;
    for (std::size_t v = 0; v < orders.size(); ++v) {
        voters.push_back("v" + std::to_string(v + 1));
        std::vector<std::string> named;
        for (int alt : orders[v])
            named.push_back(alts[alt]);
        named_orders.push_back(std::move(named));
    }
    return bam::PreferenceProfile(alts, voters, named_orders);
}

// Visits every profile with exactly n voters whose orders come from the
// given pool; returns false from the callback to stop early.
inline void for_each_profile(int m, int n, const std::vector<std::vector<int>>& pool,
                             const std::function<void(const bam::PreferenceProfile&)>& visit) {
    std::vector<int> choice(n, 0);
    while (true) {
        std::vector<std::vector<int>> orders;
        orders.reserve(n);
        for (int v = 0; v < n; ++v)
            orders.push_back(pool[choice[v]]);
        visit(profile_from_orders(m, orders));
        int digit = n - 1;
        while (digit >= 0 && ++choice[digit] == static_cast<int>(pool.size())) {
            choice[digit] = 0;
            --digit;
        }
        if (digit < 0)
            break;
    }
}

inline bam::PreferenceProfile random_profile(std::mt19937_64& rng, int m, int n, int maxlen) {
    std::vector<std::vector<int>> orders;
    std::uniform_int_distribution<int> len_dist(0, std::min(m, maxlen));
    std::vector<int> alts(m);
    for (int i = 0; i < m; ++i)
        alts[i] = i;
    for (int v = 0; v < n; ++v) {
        std::shuffle(alts.begin(), alts.end(), rng);
        const int len = len_dist(rng);
        orders.emplace_back(alts.begin(), alts.begin() + len);
    }
    return profile_from_orders(m, orders);
}

// Ground-truth minimum via the literal brute force, sweeping k upward.
inline int oracle_min_k(const bam::PreferenceProfile& profile) {
    for (int k = 0;; ++k) {
        if (bam::oracle_solve(profile, k).yes)
            return k;
    }
}

// --- source-problem oracles (test-side only) ---

inline bool brute_force_3colorable(const bam::GraphInstance& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, w] : graph.edges) {
        const auto iu = std::find(graph.vertices.begin(), graph.vertices.end(), u);
        const auto iw = std::find(graph.vertices.begin(), graph.vertices.end(), w);
        edges.emplace_back(static_cast<int>(iu - graph.vertices.begin()),
                           static_cast<int>(iw - graph.vertices.begin()));
    }
    std::vector<int> color(n, 0);
    std::function<bool(int)> assign = [&](int v) {
        if (v == n) {
            for (const auto& [a, b] : edges)
                if (color[a] == color[b])
                    return false;
            return true;
        }
        for (int c = 0; c < 3; ++c) {
            color[v] = c;
            if (assign(v + 1))
                return true;
        }
        return false;
    };
    return assign(0);
}

inline bool truth_table_satisfiable(const bam::CnfInstance& cnf) {
    for (unsigned mask = 0; mask < (1u << cnf.num_vars); ++mask) {
        bool all = true;
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            for (int lit : clause) {
                const bool value = (mask >> (std::abs(lit) - 1)) & 1;
                if (lit > 0 ? value : !value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

inline bool assignment_satisfies(const bam::CnfInstance& cnf, const std::vector<bool>& nu) {
    for (const auto& clause : cnf.clauses) {
        bool sat = false;
        for (int lit : clause)
            if (lit > 0 ? nu[lit - 1] : !nu[-lit - 1])
                sat = true;
        if (!sat)
            return false;
    }
    return true;
}

inline bool exact_cover_exists(const bam::Rxc3Instance& instance) {
    const int elements = 3 * instance.q;
    const int subsets = static_cast<int>(instance.subsets.size());
    for (unsigned mask = 0; mask < (1u << subsets); ++mask) {
        std::vector<int> covered(elements + 1, 0);
        for (int j = 0; j < subsets; ++j)
            if ((mask >> j) & 1)
                for (int x : instance.subsets[j])
                    ++covered[x];
        bool ok = true;
        for (int x = 1; x <= elements; ++x)
            if (covered[x] != 1)
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

// --- shared fixtures ---

// Two reversed complete orders plus a partial third voter; minimum k is 6.
inline bam::PreferenceProfile reversed_orders_profile() {
    return make_profile({"c1", "c2", "c3", "c4"}, {{"v1", {"c1", "c2", "c3", "c4"}},
                                                   {"v2", {"c4", "c3", "c2", "c1"}},
                                                   {"v3", {"c4", "c1", "c2"}}});
}

// Three-cycle of pairwise orders; minimum k is 3 while the bound gives 2.
inline bam::PreferenceProfile cycle_three() {
    return make_profile({"c1", "c2", "c3"},
                        {{"v1", {"c1", "c2"}}, {"v2", {"c2", "c3"}}, {"v3", {"c3", "c1"}}});
}

// Five-alternative chain against a short overlapping order: the minimum
// is k=4 with M_u=2, M_w=0, M_uw=2.
inline bam::PreferenceProfile two_voter_worked_example() {
    return make_profile({"c1", "c2", "c3", "c4", "c5"},
                        {{"u", {"c1", "c2", "c3", "c4", "c5"}}, {"w", {"c4", "c3"}}});
}

} // namespace bamtest

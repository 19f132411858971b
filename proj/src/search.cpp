#include "bam/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "bam/bounds.hpp"
#include "bam/partial.hpp"
#include "bam/special.hpp"
#include "bam/twovoter.hpp"

namespace bam {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

AttrSet mask_to_attrs(std::uint64_t mask) {
    AttrSet attrs;
    while (mask) {
        attrs.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return attrs;
}

// Profile restricted to alternatives that appear in some order.
struct Stripped {
    std::vector<int> alts;                // stripped index -> original alternative index
    std::vector<int> stripped_index;      // original -> stripped index or -1
    std::vector<std::vector<int>> orders; // per voter, stripped indices

    int m() const { return static_cast<int>(alts.size()); }
};

Stripped strip(const PreferenceProfile& profile) {
    Stripped s;
    s.stripped_index.assign(profile.num_alternatives(), -1);
    for (const auto& order : profile.orders())
        for (int alt : order)
            if (s.stripped_index[alt] == -1)
                s.stripped_index[alt] = 0;
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        if (s.stripped_index[c] == 0) {
            s.stripped_index[c] = static_cast<int>(s.alts.size());
            s.alts.push_back(c);
        } else {
            s.stripped_index[c] = -1;
        }
    }
    s.orders.reserve(profile.num_voters());
    for (const auto& order : profile.orders()) {
        std::vector<int> mapped;
        mapped.reserve(order.size());
        for (int alt : order)
            mapped.push_back(s.stripped_index[alt]);
        s.orders.push_back(std::move(mapped));
    }
    return s;
}

AttributeModel witness_from_masks(const PreferenceProfile& profile, const Stripped& s, int k,
                                  const std::vector<std::uint64_t>& has,
                                  const std::vector<std::uint64_t>& cares) {
    AttributeModel model;
    model.k = k;
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        const int idx = s.stripped_index[c];
        model.set_has(profile.alternative_name(c), idx == -1 ? AttrSet{} : mask_to_attrs(has[idx]));
    }
    for (int v = 0; v < profile.num_voters(); ++v)
        model.set_cares(profile.voter_name(v), mask_to_attrs(cares[v]));
    return model;
}

// Witness for the k >= m(m-1) fast path: the private-attribute construction
// over the mentioned alternatives, padded to the requested k.
AttributeModel guard_witness(const PreferenceProfile& profile, const Stripped& s, int k) {
    std::vector<std::string> sub_alts;
    sub_alts.reserve(s.alts.size());
    for (int alt : s.alts)
        sub_alts.push_back(profile.alternative_name(alt));
    std::vector<std::vector<std::string>> sub_orders;
    sub_orders.reserve(profile.num_voters());
    for (const auto& order : s.orders) {
        std::vector<std::string> named;
        named.reserve(order.size());
        for (int alt : order)
            named.push_back(sub_alts[alt]);
        sub_orders.push_back(std::move(named));
    }
    const PreferenceProfile sub(sub_alts, profile.voters(), sub_orders);
    AttributeModel base = trivial_bam(sub);

    AttributeModel model;
    model.k = k;
    for (const auto& alt : profile.alternatives()) {
        const AttrSet* attrs = base.find_has(alt);
        model.set_has(alt, attrs ? *attrs : AttrSet{});
    }
    for (const auto& voter : profile.voters())
        model.set_cares(voter, base.cares(voter));
    return model;
}

// First cares mask (in ascending order over all 2^k subsets) explaining one
// order under the given has-masks, or -1. Two shortcuts keep the result
// bit-identical to the plain scan: a pair with has(a_i) subseteq has(a__i+1)
// admits no separating cares at all, and the smallest explaining mask never
// uses attributes outside the union of the has-sets, so ascending submask
// enumeration over that union visits it first.
std::int64_t first_explaining_cares(const std::vector<std::uint64_t>& has,
                                    const std::vector<int>& order) {
    if (order.size() <= 1)
        return 0;
    std::uint64_t universe = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if ((has[order[i]] & ~has[order[i + 1]]) == 0)
            return -1;
    }
    for (int alt : order)
        universe |= has[alt];
    std::uint64_t cares = 0;
    while (true) {
        bool ok = true;
        int prev = std::popcount(has[order[0]] & cares);
        for (std::size_t i = 1; i < order.size(); ++i) {
            const int cur = std::popcount(has[order[i]] & cares);
            if (prev <= cur) {
                ok = false;
                break;
            }
            prev = cur;
        }
        if (ok)
            return static_cast<std::int64_t>(cares);
        if (cares == universe)
            return -1;
        cares = (cares - universe) & universe;
    }
}

struct Limits {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::uint64_t> time_limit_ms;
    Clock::time_point start;

    void check(std::uint64_t nodes) const {
        if (node_limit && nodes > *node_limit)
            throw ResourceLimitError("node limit exceeded");
        if (time_limit_ms && (nodes & 1023) == 0 && elapsed_ms(start) > static_cast<double>(*time_limit_ms))
            throw ResourceLimitError("time limit exceeded");
    }
};

// One oracle enumeration slice: has-assignments whose first digit (the mask
// of alternative 0) lies in [first_lo, first_hi). Returns the first witness
// in odometer order within the slice.
struct SliceResult {
    bool found = false;
    std::vector<std::uint64_t> has, cares;
    std::uint64_t nodes = 0;
};

SliceResult oracle_slice(const Stripped& s, int k, std::uint64_t first_lo, std::uint64_t first_hi,
                         const Limits& limits, const std::atomic<bool>* stop) {
    const int m = s.m();
    const int n = static_cast<int>(s.orders.size());
    const std::uint64_t per_alt = std::uint64_t{1} << k;

    SliceResult result;
    std::vector<std::uint64_t> has(m, 0);
    has[0] = first_lo;
    std::vector<std::uint64_t> cares(n, 0);

    while (true) {
        ++result.nodes;
        limits.check(result.nodes);
        if (stop && (result.nodes & 255) == 0 && stop->load(std::memory_order_relaxed))
            return result;

        bool all_ok = true;
        for (int v = 0; v < n; ++v) {
            const std::int64_t found = first_explaining_cares(has, s.orders[v]);
            if (found < 0) {
                all_ok = false;
                break;
            }
            cares[v] = static_cast<std::uint64_t>(found);
        }
        if (all_ok) {
            result.found = true;
            result.has = has;
            result.cares = cares;
            return result;
        }

        // Odometer over alternatives, the last one varies fastest; the first
        // digit stays inside [first_lo, first_hi).
        int digit = m - 1;
        while (digit >= 0) {
            ++has[digit];
            const std::uint64_t cap = digit == 0 ? first_hi : per_alt;
            if (has[digit] < cap)
                break;
            has[digit] = digit == 0 ? first_lo : 0;
            --digit;
        }
        if (digit < 0)
            return result;
    }
}

} // namespace

SolveOutcome oracle_solve(const PreferenceProfile& profile, int k, const SearchConfig& cfg) {
    if (k < 0)
        throw PreconditionError("oracle_solve: k must be non-negative");
    const auto start = Clock::now();
    const Stripped s = strip(profile);
    const int m = s.m();

    SolveOutcome outcome;
    if (static_cast<long long>(k) >= static_cast<long long>(m) * (m - 1)) {
        outcome.yes = true;
        outcome.witness = guard_witness(profile, s, k);
        outcome.stats.time_ms = elapsed_ms(start);
        return outcome;
    }
    if (k > 63)
        throw ResourceLimitError("oracle_solve: enumeration supports at most 63 attributes");

    Limits limits{cfg.node_limit, cfg.time_limit_ms, start};
    const std::uint64_t per_alt = std::uint64_t{1} << k;
    const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(per_alt)));

    if (threads == 1) {
        SliceResult result = oracle_slice(s, k, 0, per_alt, limits, nullptr);
        outcome.stats.nodes = result.nodes;
        outcome.stats.time_ms = elapsed_ms(start);
        if (result.found) {
            outcome.yes = true;
            outcome.witness = witness_from_masks(profile, s, k, result.has, result.cares);
        } else {
            outcome.reason = "exhausted all has-assignments";
        }
        return outcome;
    }

    // Partition the first digit's range. The decision stays exact; the
    // witness may depend on thread timing.
    std::atomic<bool> stop{false};
    std::vector<SliceResult> results(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    Limits thread_limits = limits;
    if (limits.node_limit)
        thread_limits.node_limit = *limits.node_limit / threads + 1;
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            const std::uint64_t lo = per_alt * t / threads;
            const std::uint64_t hi = per_alt * (t + 1) / threads;
            if (lo >= hi)
                return;
            try {
                results[t] = oracle_slice(s, k, lo, hi, thread_limits, &stop);
                if (results[t].found)
                    stop.store(true, std::memory_order_relaxed);
            } catch (...) {
                errors[t] = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        });
    }
    for (auto& worker : workers)
        worker.join();
    for (auto& error : errors)
        if (error)
            std::rethrow_exception(error);
    for (const auto& result : results)
        outcome.stats.nodes += result.nodes;
    outcome.stats.time_ms = elapsed_ms(start);
    for (const auto& result : results) {
        if (result.found) {
            outcome.yes = true;
            outcome.witness = witness_from_masks(profile, s, k, result.has, result.cares);
            return outcome;
        }
    }
    outcome.reason = "exhausted all has-assignments";
    return outcome;
}

namespace {

struct DfsState {
    const Stripped& s;
    int k;
    std::uint64_t per_alt;
    bool symmetry;
    std::vector<int> assign_order;  // depth -> stripped alternative
    std::vector<int> depth_of;      // stripped alternative -> depth
    std::vector<int> lo, hi;        // cardinality windows per stripped alternative
    std::vector<std::vector<int>> voters_of; // stripped alternative -> voters mentioning it
    std::vector<std::uint64_t> has; // current partial assignment
    Limits limits;
    std::uint64_t nodes = 0;
};

// Columns (attribute bit positions) must be lexicographically non-increasing
// over the rows assigned so far, rows ordered by assignment depth. A prefix
// that already orders two adjacent columns the wrong way can never be fixed
// by later rows.
bool columns_sorted(const DfsState& st, int depth) {
    for (int col = 0; col + 1 < st.k; ++col) {
        for (int d = 0; d <= depth; ++d) {
            const std::uint64_t mask = st.has[st.assign_order[d]];
            const int left = static_cast<int>((mask >> col) & 1);
            const int right = static_cast<int>((mask >> (col + 1)) & 1);
            if (left != right) {
                if (left < right)
                    return false;
                break;
            }
        }
    }
    return true;
}

// Feasibility of one voter's order restricted to already-assigned
// alternatives (a necessary condition for any completion).
bool suborder_feasible(const DfsState& st, int voter, int depth) {
    std::vector<std::uint64_t> along;
    for (int alt : st.s.orders[voter])
        if (st.depth_of[alt] <= depth)
            along.push_back(st.has[alt]);
    if (along.size() <= 1)
        return true;
    if (st.k <= 20)
        return first_feasible_cares_mask(along, st.k).has_value();
    std::vector<AttrSet> sets;
    sets.reserve(along.size());
    for (std::uint64_t mask : along)
        sets.push_back(mask_to_attrs(mask));
    return solve_has_single_voter(sets, st.k, HasMode::Typed).feasible;
}

bool dfs(DfsState& st, int depth) {
    if (depth == st.s.m())
        return true;
    const int alt = st.assign_order[depth];
    for (std::uint64_t mask = 0; mask < st.per_alt; ++mask) {
        ++st.nodes;
        st.limits.check(st.nodes);
        const int bits = std::popcount(mask);
        if (bits < st.lo[alt] || bits > st.hi[alt])
            continue;
        st.has[alt] = mask;
        if (st.symmetry && !columns_sorted(st, depth))
            continue;
        bool ok = true;
        for (int voter : st.voters_of[alt]) {
            if (!suborder_feasible(st, voter, depth)) {
                ok = false;
                break;
            }
        }
        if (ok && dfs(st, depth + 1))
            return true;
    }
    return false;
}

} // namespace

SolveOutcome dfs_solve(const PreferenceProfile& profile, int k, const SearchConfig& cfg) {
    if (cfg.oracle_mode)
        return oracle_solve(profile, k, cfg);
    if (k < 0)
        throw PreconditionError("dfs_solve: k must be non-negative");
    const auto start = Clock::now();
    const Stripped s = strip(profile);
    const int m = s.m();

    SolveOutcome outcome;
    if (static_cast<long long>(k) >= static_cast<long long>(m) * (m - 1)) {
        outcome.yes = true;
        outcome.witness = guard_witness(profile, s, k);
        outcome.stats.time_ms = elapsed_ms(start);
        return outcome;
    }
    if (k > 63)
        throw ResourceLimitError("dfs_solve: enumeration supports at most 63 attributes");

    const CardinalityWindows windows = cardinality_windows(profile, k);
    if (!windows.feasible()) {
        outcome.reason =
            windows.infeasible->kind == CardinalityWindows::Infeasibility::Kind::Voter
                ? "order length exceeds k+1"
                : "cardinality window empty for alternative '" + windows.infeasible->id + "'";
        outcome.stats.time_ms = elapsed_ms(start);
        return outcome;
    }

    DfsState st{s,
                k,
                std::uint64_t{1} << k,
                cfg.symmetry_breaking,
                {},
                {},
                {},
                {},
                {},
                std::vector<std::uint64_t>(m, 0),
                Limits{cfg.node_limit, cfg.time_limit_ms, start},
                0};
    st.lo.resize(m);
    st.hi.resize(m);
    for (int i = 0; i < m; ++i) {
        st.lo[i] = windows.has_low[s.alts[i]];
        st.hi[i] = windows.has_high[s.alts[i]];
    }
    std::vector<int> degree(m, 0);
    st.voters_of.assign(m, {});
    for (int v = 0; v < static_cast<int>(s.orders.size()); ++v) {
        for (int alt : s.orders[v]) {
            ++degree[alt];
            if (s.orders[v].size() >= 2)
                st.voters_of[alt].push_back(v);
        }
    }
    st.assign_order.resize(m);
    for (int i = 0; i < m; ++i)
        st.assign_order[i] = i;
    std::stable_sort(st.assign_order.begin(), st.assign_order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    st.depth_of.assign(m, 0);
    for (int d = 0; d < m; ++d)
        st.depth_of[st.assign_order[d]] = d;

    const bool found = dfs(st, 0);
    outcome.stats.nodes = st.nodes;
    if (found) {
        // The suborder checks covered every full order, so extraction succeeds.
        std::vector<std::uint64_t> cares(s.orders.size(), 0);
        for (int v = 0; v < static_cast<int>(s.orders.size()); ++v) {
            if (k <= 20) {
                cares[v] = static_cast<std::uint64_t>(first_explaining_cares(st.has, s.orders[v]));
            } else {
                std::vector<AttrSet> along;
                along.reserve(s.orders[v].size());
                for (int alt : s.orders[v])
                    along.push_back(mask_to_attrs(st.has[alt]));
                const SingleVoterResult single = solve_has_single_voter(along, k, HasMode::Typed);
                std::uint64_t mask = 0;
                for (int a : *single.cares)
                    mask |= std::uint64_t{1} << (a - 1);
                cares[v] = mask;
            }
        }
        outcome.yes = true;
        outcome.witness = witness_from_masks(profile, s, k, st.has, cares);
    } else {
        outcome.reason = "search space exhausted";
    }
    outcome.stats.time_ms = elapsed_ms(start);
    return outcome;
}

MinKResult solve_min_k(const PreferenceProfile& profile, const SearchConfig& cfg) {
    const auto start = Clock::now();
    MinKResult result;

    int max_len = 0, min_constraining_len = 0;
    bool uniform = true;
    for (const auto& order : profile.orders()) {
        const int len = static_cast<int>(order.size());
        max_len = std::max(max_len, len);
        if (len >= 2) {
            if (min_constraining_len == 0)
                min_constraining_len = len;
            else if (min_constraining_len != len)
                uniform = false;
        }
    }
    if (max_len <= 1) {
        result.k = 0;
        result.witness = empty_model(profile, 0);
        result.stats.time_ms = elapsed_ms(start);
        return result;
    }

    if (profile.num_voters() == 2) {
        TwoVoterResult two = min_k_two_voters(profile);
        result.k = two.k;
        result.witness = std::move(two.witness);
        result.stats.time_ms = elapsed_ms(start);
        return result;
    }

    int from = lower_bound_k(profile);
    if (uniform) {
        SolveOutcome out = uniform_length_solve(profile, max_len - 1);
        if (out.yes) {
            // The cardinality bound already forces k >= max_len - 1.
            result.k = max_len - 1;
            result.witness = std::move(*out.witness);
            result.stats.time_ms = elapsed_ms(start);
            return result;
        }
        from = std::max(from, max_len);
    }

    const int to = upper_bound_k(profile);
    for (int k = from; k <= to; ++k) {
        SolveOutcome out = dfs_solve(profile, k, cfg);
        result.stats.nodes += out.stats.nodes;
        if (out.yes) {
            result.k = k;
            result.witness = std::move(*out.witness);
            result.stats.time_ms = elapsed_ms(start);
            return result;
        }
    }
    throw std::logic_error("solve_min_k: upper bound violated"); // unreachable
}

} // namespace bam

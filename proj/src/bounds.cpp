#include "bam/bounds.hpp"

#include <algorithm>

namespace bam {

int lower_bound_k(const PreferenceProfile& profile) {
    const RankView view = rank_view(profile);
    const int n = profile.num_voters();
    const int m = profile.num_alternatives();
    int bound = 0;
    // Scan all ordered voter pairs per alternative; the diagonal v == w
    // degenerates to the |order_v| - 1 cardinality bound.
    for (int c = 0; c < m; ++c) {
        for (int v = 0; v < n; ++v) {
            if (!view.ranks(v, c))
                continue;
            for (int w = 0; w < n; ++w) {
                if (!view.ranks(w, c))
                    continue;
                if (view.rank[v][c] < view.rank[w][c])
                    continue;
                bound = std::max(bound, view.length[w] - view.rank[w][c] + view.rank[v][c] - 1);
            }
        }
    }
    return bound;
}

int upper_bound_k(const PreferenceProfile& profile) {
    const int m = profile.num_alternatives();
    const int n = profile.num_voters();
    if (m <= 1)
        return 0;
    return std::min((m - 1) * m, (m - 1) * n);
}

AttributeModel trivial_bam(const PreferenceProfile& profile) {
    const int m = profile.num_alternatives();
    const int per_alt = std::max(0, m - 1);

    AttributeModel model;
    model.k = per_alt * m;
    // Alternative with index j owns attributes j*per_alt+1 .. (j+1)*per_alt.
    for (int j = 0; j < m; ++j) {
        AttrSet attrs;
        attrs.reserve(per_alt);
        for (int i = 1; i <= per_alt; ++i)
            attrs.push_back(j * per_alt + i);
        model.set_has(profile.alternative_name(j), std::move(attrs));
    }
    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        const int len = static_cast<int>(order.size());
        AttrSet attrs;
        for (int pos = 0; pos < len; ++pos) {
            const int alt = order[pos];
            const int want = len - pos - 1; // score the alternative must reach
            for (int i = 1; i <= want; ++i)
                attrs.push_back(alt * per_alt + i);
        }
        model.set_cares(profile.voter_name(v), normalize_attr_set(std::move(attrs), model.k));
    }
    return model;
}

CardinalityWindows cardinality_windows(const PreferenceProfile& profile, int k) {
    const RankView view = rank_view(profile);
    const int n = profile.num_voters();
    const int m = profile.num_alternatives();

    CardinalityWindows windows;
    windows.k = k;
    windows.min_cares.assign(n, 0);
    windows.has_low.assign(m, 0);
    windows.has_high.assign(m, k);

    for (int v = 0; v < n; ++v) {
        windows.min_cares[v] = std::max(0, view.length[v] - 1);
        if (windows.min_cares[v] > k) {
            windows.infeasible = CardinalityWindows::Infeasibility{
                CardinalityWindows::Infeasibility::Kind::Voter, profile.voter_name(v)};
            return windows;
        }
    }
    for (int v = 0; v < n; ++v) {
        const auto& order = profile.order(v);
        for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
            const int c = order[pos];
            windows.has_low[c] = std::max(windows.has_low[c], view.length[v] - pos - 1);
            windows.has_high[c] = std::min(windows.has_high[c], k - pos);
        }
    }
    for (int c = 0; c < m; ++c) {
        if (windows.has_low[c] > windows.has_high[c]) {
            windows.infeasible = CardinalityWindows::Infeasibility{
                CardinalityWindows::Infeasibility::Kind::Alternative, profile.alternative_name(c)};
            return windows;
        }
    }
    return windows;
}

} // namespace bam

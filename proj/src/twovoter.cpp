#include "bam/twovoter.hpp"

#include <algorithm>

namespace bam {

TypeScores value_computation(const PreferenceProfile& profile) {
    if (profile.num_voters() != 2)
        throw PreconditionError("value_computation: profile must have exactly two voters");

    const RankView view = rank_view(profile);
    const int m = profile.num_alternatives();
    const int u = 0, w = 1;

    TypeScores ts;
    ts.lambda_u.assign(m, 0);
    ts.lambda_w.assign(m, 0);
    ts.t_u.assign(m, 0);
    ts.t_w.assign(m, 0);
    ts.t_uw.assign(m, 0);
    ts.conv.assign(m, 0);
    ts.s_u.assign(m, 0);
    ts.s_w.assign(m, 0);
    ts.s_uw.assign(m, 0);

    for (int c = 0; c < m; ++c) {
        ts.lambda_u[c] = view.ranks(u, c) ? view.length[u] - view.rank[u][c] - 1 : 0;
        ts.lambda_w[c] = view.ranks(w, c) ? view.length[w] - view.rank[w][c] - 1 : 0;
        ++ts.ops;
    }
    for (int c = 0; c < m; ++c) {
        if (view.ranks(u, c) && view.ranks(w, c)) {
            ts.t_uw[c] = std::min(ts.lambda_u[c], ts.lambda_w[c]);
            ts.t_u[c] = ts.lambda_u[c] - ts.t_uw[c];
            ts.t_w[c] = ts.lambda_w[c] - ts.t_uw[c];
            ts.m_u = std::max(ts.m_u, ts.t_u[c]);
            ts.m_w = std::max(ts.m_w, ts.t_w[c]);
        }
        ++ts.ops;
    }
    for (int c = 0; c < m; ++c) {
        const bool in_u = view.ranks(u, c);
        const bool in_w = view.ranks(w, c);
        if (in_u && in_w) {
            ts.conv[c] = std::min({ts.m_w - ts.t_w[c], ts.m_u - ts.t_u[c], ts.t_uw[c]});
            ts.s_uw[c] = ts.t_uw[c] - ts.conv[c];
            ts.s_u[c] = ts.t_u[c] + ts.conv[c];
            ts.s_w[c] = ts.t_w[c] + ts.conv[c];
        } else if (in_u) {
            ts.s_u[c] = std::min(ts.lambda_u[c], ts.m_u);
            ts.s_uw[c] = ts.lambda_u[c] - ts.s_u[c];
        } else if (in_w) {
            ts.s_w[c] = std::min(ts.lambda_w[c], ts.m_w);
            ts.s_uw[c] = ts.lambda_w[c] - ts.s_w[c];
        }
        ts.m_uw = std::max(ts.m_uw, ts.s_uw[c]);
        ++ts.ops;
    }
    ts.k = ts.m_u + ts.m_w + ts.m_uw;
    return ts;
}

TwoVoterResult min_k_two_voters(const PreferenceProfile& profile) {
    TwoVoterResult result;
    result.scores = value_computation(profile);
    const TypeScores& ts = result.scores;
    result.k = ts.k;

    // Attribute blocks: uw = 1..m_uw, u = m_uw+1..m_uw+m_u, w = the rest.
    const int uw_base = 0;
    const int u_base = ts.m_uw;
    const int w_base = ts.m_uw + ts.m_u;

    AttributeModel model;
    model.k = ts.k;
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        AttrSet attrs;
        for (int i = 1; i <= ts.s_uw[c]; ++i)
            attrs.push_back(uw_base + i);
        for (int i = 1; i <= ts.s_u[c]; ++i)
            attrs.push_back(u_base + i);
        for (int i = 1; i <= ts.s_w[c]; ++i)
            attrs.push_back(w_base + i);
        model.set_has(profile.alternative_name(c), normalize_attr_set(std::move(attrs), ts.k));
    }
    AttrSet cares_u, cares_w;
    for (int i = 1; i <= ts.m_uw; ++i) {
        cares_u.push_back(uw_base + i);
        cares_w.push_back(uw_base + i);
    }
    for (int i = 1; i <= ts.m_u; ++i)
        cares_u.push_back(u_base + i);
    for (int i = 1; i <= ts.m_w; ++i)
        cares_w.push_back(w_base + i);
    model.set_cares(profile.voter_name(0), normalize_attr_set(std::move(cares_u), ts.k));
    model.set_cares(profile.voter_name(1), normalize_attr_set(std::move(cares_w), ts.k));

    result.witness = std::move(model);
    return result;
}

} // namespace bam

#include "bam/twosat.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bam/special.hpp"

namespace bam {

TwoSatInstance encode_k2(const PreferenceProfile& profile) {
    TwoSatInstance inst;
    inst.num_vars = 2 * profile.num_alternatives();
    auto h1 = [](int alt) { return pos_lit(2 * alt); };
    auto h2 = [](int alt) { return pos_lit(2 * alt + 1); };

    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        if (order.size() <= 1)
            continue;
        if (order.size() > 3)
            throw PreconditionError("encode_k2: order of voter '" + profile.voter_name(v) +
                                    "' has length > 3");
        if (order.size() == 3) {
            const int a = order[0], b = order[1], c = order[2];
            inst.clauses.emplace_back(h1(a), h1(a));
            inst.clauses.emplace_back(h2(a), h2(a));
            inst.clauses.emplace_back(negate(h1(b)), negate(h2(b)));
            inst.clauses.emplace_back(h1(b), h2(b));
            inst.clauses.emplace_back(negate(h1(c)), negate(h1(c)));
            inst.clauses.emplace_back(negate(h2(c)), negate(h2(c)));
        } else {
            const int d = order[0], e = order[1];
            inst.clauses.emplace_back(h1(d), h2(d));
            inst.clauses.emplace_back(negate(h1(e)), negate(h2(e)));
            inst.clauses.emplace_back(h1(d), negate(h2(e)));
            inst.clauses.emplace_back(h2(d), negate(h1(e)));
        }
    }
    return inst;
}

namespace {

// Iterative Tarjan over the implication graph. Nodes are literals; clause
// (x v y) contributes edges ~x -> y and ~y -> x.
struct SccDecomposition {
    std::vector<int> component; // node -> scc id, ids in reverse topological order
    int count = 0;
};

SccDecomposition tarjan(int num_nodes, const std::vector<std::vector<int>>& adj) {
    SccDecomposition scc;
    scc.component.assign(num_nodes, -1);
    std::vector<int> index(num_nodes, -1), lowlink(num_nodes, 0);
    std::vector<bool> on_stack(num_nodes, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int node;
        std::size_t edge;
    };
    std::vector<Frame> frames;

    for (int start = 0; start < num_nodes; ++start) {
        if (index[start] != -1)
            continue;
        frames.push_back({start, 0});
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const int u = frame.node;
            if (frame.edge < adj[u].size()) {
                const int w = adj[u][frame.edge++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[u] = std::min(lowlink[u], index[w]);
                }
            } else {
                if (lowlink[u] == index[u]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc.component[w] = scc.count;
                        if (w == u)
                            break;
                    }
                    ++scc.count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().node;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
                }
            }
        }
    }
    return scc;
}

} // namespace

std::pair<bool, std::vector<bool>> twosat_decide(const TwoSatInstance& instance) {
    const int num_nodes = 2 * instance.num_vars;
    std::vector<std::vector<int>> adj(num_nodes);
    for (const auto& [x, y] : instance.clauses) {
        adj[negate(x)].push_back(y);
        adj[negate(y)].push_back(x);
    }

    // Visit the negative literal of each variable first so that variables no
    // clause touches come out false.
    std::vector<std::vector<int>> ordered_adj(num_nodes);
    std::vector<int> node_of(num_nodes), order(num_nodes);
    for (int var = 0; var < instance.num_vars; ++var) {
        order[2 * var] = neg_lit(var);
        order[2 * var + 1] = pos_lit(var);
    }
    std::vector<int> position(num_nodes);
    for (int i = 0; i < num_nodes; ++i)
        position[order[i]] = i;
    for (int node = 0; node < num_nodes; ++node) {
        ordered_adj[position[node]].reserve(adj[node].size());
        for (int to : adj[node])
            ordered_adj[position[node]].push_back(position[to]);
        node_of[position[node]] = node;
    }

    const SccDecomposition scc = tarjan(num_nodes, ordered_adj);
    std::vector<int> component(num_nodes);
    for (int i = 0; i < num_nodes; ++i)
        component[node_of[i]] = scc.component[i];

    std::vector<bool> assignment(instance.num_vars, false);
    for (int var = 0; var < instance.num_vars; ++var) {
        const int cp = component[pos_lit(var)];
        const int cn = component[neg_lit(var)];
        if (cp == cn)
            return {false, {}};
        // Smaller component id = later in topological order = chosen truth value.
        assignment[var] = cp < cn;
    }
    return {true, assignment};
}

SolveOutcome solve_k_le_2(const PreferenceProfile& profile, int k) {
    if (k < 0 || k > 2)
        throw PreconditionError("solve_k_le_2: k must be in {0,1,2}");
    const auto start = std::chrono::steady_clock::now();
    auto timed = [&](SolveOutcome outcome) {
        outcome.stats.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return outcome;
    };

    int max_len = 0;
    for (const auto& order : profile.orders())
        max_len = std::max(max_len, static_cast<int>(order.size()));

    if (max_len > k + 1)
        return timed(SolveOutcome::no("order length exceeds k+1"));

    if (k == 0)
        return timed(SolveOutcome::with(empty_model(profile, 0)));

    if (k == 1)
        return timed(uniform_length_solve(profile, 1));

    const TwoSatInstance inst = encode_k2(profile);
    auto [sat, assignment] = twosat_decide(inst);
    if (!sat)
        return timed(SolveOutcome::no("2-SAT encoding unsatisfiable"));

    AttributeModel model;
    model.k = 2;
    for (int a = 0; a < profile.num_alternatives(); ++a) {
        AttrSet attrs;
        if (assignment[2 * a])
            attrs.push_back(1);
        if (assignment[2 * a + 1])
            attrs.push_back(2);
        model.set_has(profile.alternative_name(a), std::move(attrs));
    }
    for (int v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.order(v);
        if (order.empty()) {
            model.set_cares(profile.voter_name(v), {});
        } else {
            // cares(v) := has(top of v's order)
            model.set_cares(profile.voter_name(v), model.has(profile.alternative_name(order[0])));
        }
    }
    return timed(SolveOutcome::with(std::move(model)));
}

std::string to_dimacs(const TwoSatInstance& instance) {
    std::ostringstream out;
    out << "p cnf " << instance.num_vars << ' ' << instance.clauses.size() << '\n';
    auto dimacs = [](Lit lit) {
        const int var = lit_var(lit) + 1;
        return lit_positive(lit) ? var : -var;
    };
    for (const auto& [x, y] : instance.clauses)
        out << dimacs(x) << ' ' << dimacs(y) << " 0\n";
    return out.str();
}

} // namespace bam

#include "bam/reductions.hpp"

#include <algorithm>
#include <set>

namespace bam {

namespace {

void validate_graph(const GraphInstance& graph) {
    std::set<std::string> declared(graph.vertices.begin(), graph.vertices.end());
    if (declared.size() != graph.vertices.size())
        throw InputError("graph: duplicate vertex");
    std::set<std::pair<std::string, std::string>> seen;
    std::set<std::string> touched;
    for (const auto& [u, w] : graph.edges) {
        if (u == w)
            throw InputError("graph: self-loop at '" + u + "'");
        if (!declared.count(u) || !declared.count(w))
            throw InputError("graph: edge references undeclared vertex");
        auto key = std::minmax(u, w);
        if (!seen.insert(key).second)
            throw InputError("graph: duplicate edge {" + u + "," + w + "}");
        touched.insert(u);
        touched.insert(w);
    }
    for (const auto& v : graph.vertices)
        if (!touched.count(v))
            throw InputError("graph: vertex '" + v + "' has degree zero");
}

void validate_cnf(const CnfInstance& cnf) {
    if (cnf.num_vars < 1)
        throw InputError("cnf: needs at least one variable");
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > cnf.num_vars)
                throw InputError("cnf: literal " + std::to_string(lit) + " out of range");
        }
    }
}

} // namespace

GeneratedBam coloring_to_bam(const GraphInstance& graph) {
    validate_graph(graph);

    std::vector<std::string> alternatives;
    for (const auto& u : graph.vertices)
        alternatives.push_back("x:" + u);
    const std::vector<std::string> d1 = {"d1_1", "d1_2", "d1_3"};
    const std::vector<std::string> d2 = {"d2_1", "d2_2", "d2_3"};
    const std::string d3 = "d3";
    alternatives.insert(alternatives.end(), d1.begin(), d1.end());
    alternatives.insert(alternatives.end(), d2.begin(), d2.end());
    alternatives.push_back(d3);

    std::vector<std::string> voters;
    std::vector<std::vector<std::string>> orders;
    auto add = [&](std::string voter, std::vector<std::string> order) {
        voters.push_back(std::move(voter));
        orders.push_back(std::move(order));
    };

    for (const auto& u : graph.vertices)
        for (int j = 1; j <= 3; ++j)
            add("vx:" + u + ":" + std::to_string(j), {d2[j - 1], "x:" + u});
    for (const auto& [u, w] : graph.edges) {
        add("ve:" + u + ":" + w, {"x:" + u, "x:" + w});
        add("ve:" + w + ":" + u, {"x:" + w, "x:" + u});
    }
    // Dummy voter groups, emitted in the fixed construction order.
    int idx = 0;
    for (auto [a, b] : {std::pair{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}})
        add("V1:" + std::to_string(++idx), {d1[a], d1[b]});
    idx = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            add("V2:" + std::to_string(++idx), {d2[i], d1[j]});
    idx = 0;
    for (auto [a, b] : {std::pair{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}})
        add("V3:" + std::to_string(++idx), {d2[a], d2[b]});
    idx = 0;
    for (int j = 0; j < 3; ++j)
        add("V4:" + std::to_string(++idx), {d3, d2[j]});

    return GeneratedBam{PreferenceProfile(alternatives, voters, orders), 3};
}

std::unordered_map<std::string, int> extract_coloring(const GraphInstance& graph,
                                                      const AttributeModel& witness) {
    std::unordered_map<std::string, int> coloring;
    for (const auto& u : graph.vertices) {
        const AttrSet& attrs = witness.has("x:" + u);
        if (attrs.size() != 1)
            throw ExtractionError("vertex alternative 'x:" + u + "' does not have exactly one attribute");
        coloring[u] = attrs.front();
    }
    for (const auto& [u, w] : graph.edges)
        if (coloring.at(u) == coloring.at(w))
            throw ExtractionError("extracted coloring assigns {" + u + "," + w + "} one color");
    return coloring;
}

GeneratedPartial sat_to_cares_m3(const CnfInstance& cnf) {
    validate_cnf(cnf);

    // Attribute 2i-1 stands for variable i, attribute 2i for its negation.
    auto attr_of = [](int lit) { return lit > 0 ? 2 * lit - 1 : -2 * lit; };
    const int k = 2 * cnf.num_vars;

    const std::vector<std::string> alternatives = {"d0", "d2", "c"};
    std::vector<std::string> voters;
    std::vector<std::vector<std::string>> orders;
    std::unordered_map<std::string, AttrSet> cares;

    for (int x = 1; x <= cnf.num_vars; ++x) {
        const std::string voter = "vx:" + std::to_string(x);
        voters.push_back(voter);
        orders.push_back({"d2", "c", "d0"});
        cares[voter] = {2 * x - 1, 2 * x};
    }
    for (int j = 0; j < static_cast<int>(cnf.clauses.size()); ++j) {
        const std::string voter = "vC:" + std::to_string(j + 1);
        voters.push_back(voter);
        orders.push_back({"c", "d0"});
        AttrSet attrs;
        for (int lit : cnf.clauses[j])
            attrs.push_back(attr_of(lit));
        cares[voter] = normalize_attr_set(std::move(attrs), k);
    }

    return GeneratedPartial{PreferenceProfile(alternatives, voters, orders), k, std::move(cares)};
}

namespace {

constexpr int kAttrNum1 = 1, kAttrNum2 = 2, kAttrNum3 = 3;
constexpr int kAttrVar = 4, kAttrTrue = 5, kAttrFalse = 6;

} // namespace

GeneratedPartial sat_to_cares_k6(const CnfInstance& cnf) {
    validate_cnf(cnf);

    std::vector<std::string> alternatives;
    for (int x = 1; x <= cnf.num_vars; ++x)
        alternatives.push_back("ax:" + std::to_string(x));
    for (int j = 1; j <= static_cast<int>(cnf.clauses.size()); ++j)
        alternatives.push_back("aC:" + std::to_string(j));
    for (int d = 1; d <= 4; ++d)
        alternatives.push_back("d" + std::to_string(d));

    std::vector<std::string> voters;
    std::vector<std::vector<std::string>> orders;
    std::unordered_map<std::string, AttrSet> cares;
    auto add = [&](std::string voter, std::vector<std::string> order, AttrSet attrs) {
        voters.push_back(voter);
        orders.push_back(std::move(order));
        cares[std::move(voter)] = std::move(attrs);
    };

    for (int x = 1; x <= cnf.num_vars; ++x) {
        const std::string ax = "ax:" + std::to_string(x);
        const std::string id = std::to_string(x);
        add("vx:" + id + ":1", {ax, "d1"}, {kAttrVar});
        add("vx:" + id + ":2", {"d1", ax, "d2"}, {kAttrTrue, kAttrFalse});
        add("vx:" + id + ":3", {"d1", "d2", "d3", ax}, {kAttrNum1, kAttrNum2, kAttrNum3});
    }
    for (int j = 0; j < static_cast<int>(cnf.clauses.size()); ++j) {
        const std::string aC = "aC:" + std::to_string(j + 1);
        const std::string id = std::to_string(j + 1);
        add("vC:" + id + ":Var", {"d2", aC}, {kAttrVar});
        add("vC:" + id + ":Num", {aC, "d4"}, {kAttrNum1, kAttrNum2, kAttrNum3});
        for (int i = 0; i < 3; ++i) {
            const int lit = cnf.clauses[j][i];
            const std::string ax = "ax:" + std::to_string(std::abs(lit));
            const int polarity = lit > 0 ? kAttrTrue : kAttrFalse;
            add("vC:" + id + ":" + std::to_string(i + 1), {ax, aC},
                normalize_attr_set({i + 1, kAttrVar, polarity}, 6));
        }
    }

    return GeneratedPartial{PreferenceProfile(alternatives, voters, orders), 6, std::move(cares)};
}

namespace {

bool satisfies(const CnfInstance& cnf, const std::vector<bool>& assignment) {
    for (const auto& clause : cnf.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const bool value = assignment[std::abs(lit) - 1];
            if (lit > 0 ? value : !value) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

} // namespace

std::vector<bool> extract_assignment_m3(const CnfInstance& cnf, const AttributeModel& witness) {
    const AttrSet& choice = witness.has("c");
    std::vector<bool> assignment(cnf.num_vars, false);
    for (int x = 1; x <= cnf.num_vars; ++x)
        assignment[x - 1] = std::binary_search(choice.begin(), choice.end(), 2 * x - 1);
    if (!satisfies(cnf, assignment))
        throw ExtractionError("m3 witness does not decode to a satisfying assignment");
    return assignment;
}

std::vector<bool> extract_assignment_k6(const CnfInstance& cnf, const AttributeModel& witness) {
    std::vector<bool> assignment(cnf.num_vars, false);
    for (int x = 1; x <= cnf.num_vars; ++x) {
        const AttrSet& attrs = witness.has("ax:" + std::to_string(x));
        assignment[x - 1] = std::binary_search(attrs.begin(), attrs.end(), kAttrTrue);
    }
    if (!satisfies(cnf, assignment))
        throw ExtractionError("k6 witness does not decode to a satisfying assignment");
    return assignment;
}

GeneratedPartial rxc3_to_has(const Rxc3Instance& instance) {
    const int q = instance.q;
    if (q < 1)
        throw InputError("rxc3: q must be positive");
    const int elements = 3 * q;
    if (static_cast<int>(instance.subsets.size()) != elements)
        throw InputError("rxc3: expected exactly 3q subsets");
    std::vector<int> occurrences(elements + 1, 0);
    for (const auto& subset : instance.subsets) {
        std::set<int> distinct(subset.begin(), subset.end());
        if (distinct.size() != 3)
            throw InputError("rxc3: subsets must contain three distinct elements");
        for (int x : subset) {
            if (x < 1 || x > elements)
                throw InputError("rxc3: element " + std::to_string(x) + " out of range");
            ++occurrences[x];
        }
    }
    for (int x = 1; x <= elements; ++x)
        if (occurrences[x] != 3)
            throw InputError("rxc3: element " + std::to_string(x) + " occurs " +
                             std::to_string(occurrences[x]) + " times, expected 3");

    // Attribute layout: subset attributes 1..3q, then each element's private
    // dummies in element order (i-1 of them for i < q, i for i >= q), then
    // the 3q+2 dummies owned by d2.
    std::vector<std::pair<int, int>> dummy_range(elements + 1); // [first, count]
    int next = elements + 1;
    for (int i = 1; i <= elements; ++i) {
        const int count = i < q ? i - 1 : i;
        dummy_range[i] = {next, count};
        next += count;
    }
    const int d2_first = next;
    const int d2_count = 3 * q + 2;
    const int k = next + d2_count - 1;

    std::vector<std::string> alternatives;
    for (int i = 1; i <= elements; ++i)
        alternatives.push_back("a:" + std::to_string(i));
    alternatives.push_back("d0");
    alternatives.push_back("d1");
    alternatives.push_back("d2");

    std::unordered_map<std::string, AttrSet> has;
    for (int i = 1; i <= elements; ++i) {
        AttrSet attrs;
        for (int j = 0; j < elements; ++j)
            if (std::find(instance.subsets[j].begin(), instance.subsets[j].end(), i) !=
                instance.subsets[j].end())
                attrs.push_back(j + 1);
        for (int d = 0; d < dummy_range[i].second; ++d)
            attrs.push_back(dummy_range[i].first + d);
        has["a:" + std::to_string(i)] = normalize_attr_set(std::move(attrs), k);
    }
    has["d0"] = {};
    AttrSet d1_attrs;
    for (int j = 1; j <= elements; ++j)
        d1_attrs.push_back(j);
    has["d1"] = std::move(d1_attrs);
    AttrSet d2_attrs;
    for (int d = 0; d < d2_count; ++d)
        d2_attrs.push_back(d2_first + d);
    has["d2"] = std::move(d2_attrs);

    // v: d2 > a_{3q} > ... > a_q > d1 > a_{q-1} > ... > a_1 > d0
    std::vector<std::string> order = {"d2"};
    for (int i = elements; i >= q; --i)
        order.push_back("a:" + std::to_string(i));
    order.push_back("d1");
    for (int i = q - 1; i >= 1; --i)
        order.push_back("a:" + std::to_string(i));
    order.push_back("d0");

    return GeneratedPartial{PreferenceProfile(alternatives, {"v"}, {order}), k, std::move(has)};
}

std::vector<int> extract_cover(const Rxc3Instance& instance, const AttributeModel& witness) {
    const int elements = 3 * instance.q;
    const AttrSet& cares = witness.cares("v");
    std::vector<int> cover;
    for (int a : cares)
        if (a <= elements)
            cover.push_back(a);
    if (static_cast<int>(cover.size()) != instance.q)
        throw ExtractionError("witness selects " + std::to_string(cover.size()) +
                              " subsets, expected q=" + std::to_string(instance.q));
    std::vector<int> covered(elements + 1, 0);
    for (int j : cover)
        for (int x : instance.subsets[j - 1])
            ++covered[x];
    for (int x = 1; x <= elements; ++x)
        if (covered[x] != 1)
            throw ExtractionError("extracted subsets do not cover element " + std::to_string(x) +
                                  " exactly once");
    return cover;
}

} // namespace bam

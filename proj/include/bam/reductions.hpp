#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

struct GraphInstance {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges; // unordered, no self-loops
};

// 3-CNF: literals are +/-(1-based variable index), three per clause.
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Exact 3-set cover, restricted: 3q elements (1..3q), 3q subsets of size 3,
// every element in exactly three subsets.
struct Rxc3Instance {
    int q = 0;
    std::vector<std::array<int, 3>> subsets;
};

struct GeneratedBam {
    PreferenceProfile profile;
    int k = 0;
};

struct GeneratedPartial {
    PreferenceProfile profile;
    int k = 0;
    std::unordered_map<std::string, AttrSet> given; // cares or has, by construction
};

// 3-Coloring -> BAM with k=3: one alternative per vertex, seven dummy
// alternatives in three groups, three voters per vertex, two per edge, and
// 24 fixed dummy voters. Every order has length two. Requires a graph
// without isolated vertices.
GeneratedBam coloring_to_bam(const GraphInstance& graph);

// Reads a proper coloring off a k=3 witness: chi(u) = z iff has(x:u) = {z}.
std::unordered_map<std::string, int> extract_coloring(const GraphInstance& graph,
                                                      const AttributeModel& witness);

// 3-SAT -> BAM with Cares over 3 alternatives; k = 2 * #variables, one
// attribute per literal.
GeneratedPartial sat_to_cares_m3(const CnfInstance& cnf);

// 3-SAT -> BAM with Cares with k=6 (attributes 1,2,3 = literal slots,
// 4 = variable marker, 5 = true, 6 = false).
GeneratedPartial sat_to_cares_k6(const CnfInstance& cnf);

// Assignment extraction: nu(x)=1 iff the variable's truth attribute appears
// in the witness has-set (alpha_x in has(c) for m3, alpha_T in has(a_x) for
// k6). Validated against the formula.
std::vector<bool> extract_assignment_m3(const CnfInstance& cnf, const AttributeModel& witness);
std::vector<bool> extract_assignment_k6(const CnfInstance& cnf, const AttributeModel& witness);

// RXC3 -> BAM with Has over a single voter. Attributes: one per subset,
// per-element private dummies, and 3q+2 dummies owned by the top dummy
// alternative.
GeneratedPartial rxc3_to_has(const Rxc3Instance& instance);

// The subsets whose attributes the single voter cares about; validated to
// be an exact cover.
std::vector<int> extract_cover(const Rxc3Instance& instance, const AttributeModel& witness);

} // namespace bam

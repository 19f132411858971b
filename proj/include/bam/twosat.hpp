#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"

namespace bam {

// A 2-SAT literal: variable index with polarity. Encoded as 2*var for the
// positive literal and 2*var+1 for the negated one.
using Lit = int;

inline Lit pos_lit(int var) { return 2 * var; }
inline Lit neg_lit(int var) { return 2 * var + 1; }
inline Lit negate(Lit lit) { return lit ^ 1; }
inline int lit_var(Lit lit) { return lit >> 1; }
inline bool lit_positive(Lit lit) { return (lit & 1) == 0; }

struct TwoSatInstance {
    int num_vars = 0;
    std::vector<std::pair<Lit, Lit>> clauses; // unit clauses carry a duplicated literal
};

// The k=2 encoding: two variables h_{a,1}, h_{a,2} per alternative (variable
// indices 2*alt and 2*alt+1). For each length-3 order a>b>c the six clauses
//   (h_a1)(h_a2)(~h_b1 v ~h_b2)(h_b1 v h_b2)(~h_c1)(~h_c2)
// and for each length-2 order d>e the four clauses
//   (h_d1 v h_d2)(~h_e1 v ~h_e2)(h_d1 v ~h_e2)(h_d2 v ~h_e1),
// emitted in exactly that order per voter. Orders of length <= 1 contribute
// nothing; length >= 4 violates the precondition.
TwoSatInstance encode_k2(const PreferenceProfile& profile);

// Implication-graph / SCC decision. On satisfiable, the witness assignment
// is deterministic (unconstrained variables come out false).
std::pair<bool, std::vector<bool>> twosat_decide(const TwoSatInstance& instance);

// Complete solver for k in {0,1,2}. k=0 is a direct length check, k=1 routes
// through the uniform-length rule, k=2 through the 2-SAT encoding.
SolveOutcome solve_k_le_2(const PreferenceProfile& profile, int k);

// DIMACS-like dump for debugging; non-normative.
std::string to_dimacs(const TwoSatInstance& instance);

} // namespace bam

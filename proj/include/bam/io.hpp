#pragma once

#include <string>
#include <vector>

#include "bam/model.hpp"
#include "bam/profile.hpp"
#include "bam/reductions.hpp"

namespace bam {

// Profile text format, line based, '#' starts a comment line:
//   alternatives: a b c
//   voter v1: a > b > c
//   voter v2:
// Voter and alternative identifiers may contain ':' but no whitespace; the
// separator after a voter id is the first colon followed by a space or end
// of line.
PreferenceProfile parse_profile(const std::string& text);
std::string serialize_profile(const PreferenceProfile& profile);

// Model text format:
//   k: 4
//   has c1: 1 2 3 4
//   cares u: 1 2
// Omitted alternatives/voters mean the empty set. A file may carry only
// has-lines or only cares-lines (partial models for the with-cares/with-has
// problems).
struct ParsedModel {
    int k = 0;
    std::vector<std::pair<std::string, AttrSet>> has_entries;
    std::vector<std::pair<std::string, AttrSet>> cares_entries;

    bool has_only() const { return cares_entries.empty(); }
    bool cares_only() const { return has_entries.empty(); }
};

ParsedModel parse_model(const std::string& text);
std::string serialize_model(const AttributeModel& model);

// Resolves the omitted-means-empty convention against a profile: entries for
// unknown identifiers are an input error, missing ones become empty sets.
AttributeModel complete_model(const ParsedModel& parsed, const PreferenceProfile& profile);

// Generator inputs.
GraphInstance parse_edge_list(const std::string& text);   // one "u w" per line
CnfInstance parse_clause_list(const std::string& text);   // one "±i ±j ±k" per line
Rxc3Instance parse_rxc3(const std::string& text);         // "q: <int>" header, "i j k" lines

} // namespace bam

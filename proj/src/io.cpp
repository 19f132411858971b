#include "bam/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bam {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Significant lines only; '#' lines and blank lines are skipped.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        lines.push_back({number, line});
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

// Splits "<id>: rest" where the separator is the first ':' followed by
// whitespace or end of line (ids themselves may contain ':').
bool split_id(const std::string& s, std::string& id, std::string& rest) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != ':')
            continue;
        if (i + 1 == s.size() || s[i + 1] == ' ' || s[i + 1] == '\t') {
            id = trim(s.substr(0, i));
            rest = i + 1 == s.size() ? "" : trim(s.substr(i + 1));
            return !id.empty();
        }
    }
    return false;
}

int parse_int(const std::string& token, int line, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        fail(line, "expected " + what + ", got '" + token + "'");
    }
    if (used != token.size())
        fail(line, "expected " + what + ", got '" + token + "'");
    return value;
}

} // namespace

PreferenceProfile parse_profile(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw InputError("profile file is empty");

    std::vector<std::string> alternatives;
    std::vector<std::string> voters;
    std::vector<std::vector<std::string>> orders;

    {
        const Line& first = lines[0];
        std::string key, rest;
        if (!split_id(first.text, key, rest) || key != "alternatives")
            fail(first.number, "expected 'alternatives: id id ...'");
        alternatives = split_ws(rest);
        std::set<std::string> seen;
        for (const auto& id : alternatives)
            if (!seen.insert(id).second)
                fail(first.number, "duplicate alternative '" + id + "'");
    }

    std::set<std::string> declared(alternatives.begin(), alternatives.end());
    std::set<std::string> voter_seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.text.rfind("voter", 0) != 0)
            fail(line.number, "expected 'voter <id>: ...'");
        std::string header = trim(line.text.substr(5));
        std::string id, rest;
        if (!split_id(header, id, rest))
            fail(line.number, "expected 'voter <id>: ...' (missing ': ' separator)");
        if (!voter_seen.insert(id).second)
            fail(line.number, "duplicate voter '" + id + "'");

        std::vector<std::string> order;
        if (!rest.empty()) {
            std::string item;
            std::istringstream parts(rest);
            while (std::getline(parts, item, '>')) {
                const std::string alt = trim(item);
                if (alt.empty())
                    fail(line.number, "empty entry in order");
                if (alt.find_first_of(" \t") != std::string::npos)
                    fail(line.number, "order entry '" + alt + "' contains whitespace");
                if (!declared.count(alt))
                    fail(line.number, "unknown alternative '" + alt + "'");
                if (std::find(order.begin(), order.end(), alt) != order.end())
                    fail(line.number, "alternative '" + alt + "' ranked twice");
                order.push_back(alt);
            }
        }
        voters.push_back(id);
        orders.push_back(std::move(order));
    }
    return PreferenceProfile(std::move(alternatives), std::move(voters), std::move(orders));
}

std::string serialize_profile(const PreferenceProfile& profile) {
    std::ostringstream out;
    out << "alternatives:";
    for (const auto& alt : profile.alternatives())
        out << ' ' << alt;
    out << '\n';
    for (int v = 0; v < profile.num_voters(); ++v) {
        out << "voter " << profile.voter_name(v) << ':';
        const auto& order = profile.order(v);
        for (std::size_t i = 0; i < order.size(); ++i)
            out << (i == 0 ? " " : " > ") << profile.alternative_name(order[i]);
        out << '\n';
    }
    return out.str();
}

ParsedModel parse_model(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw InputError("model file is empty");

    ParsedModel model;
    {
        const Line& first = lines[0];
        std::string key, rest;
        if (!split_id(first.text, key, rest) || key != "k")
            fail(first.number, "expected 'k: <int>' as the first line");
        model.k = parse_int(rest, first.number, "attribute count");
        if (model.k < 0)
            fail(first.number, "k must be non-negative");
    }

    std::set<std::string> has_seen, cares_seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const bool is_has = line.text.rfind("has", 0) == 0;
        const bool is_cares = line.text.rfind("cares", 0) == 0;
        if (!is_has && !is_cares)
            fail(line.number, "expected 'has <id>: ...' or 'cares <id>: ...'");
        std::string header = trim(line.text.substr(is_has ? 3 : 5));
        std::string id, rest;
        if (!split_id(header, id, rest))
            fail(line.number, "missing ': ' separator");
        auto& seen = is_has ? has_seen : cares_seen;
        if (!seen.insert(id).second)
            fail(line.number, std::string("duplicate ") + (is_has ? "has" : "cares") +
                                  " entry for '" + id + "'");
        AttrSet attrs;
        for (const std::string& token : split_ws(rest))
            attrs.push_back(parse_int(token, line.number, "attribute index"));
        try {
            attrs = normalize_attr_set(std::move(attrs), model.k);
        } catch (const InputError& e) {
            fail(line.number, e.what());
        }
        auto& entries = is_has ? model.has_entries : model.cares_entries;
        entries.emplace_back(id, std::move(attrs));
    }
    return model;
}

std::string serialize_model(const AttributeModel& model) {
    std::ostringstream out;
    out << "k: " << model.k << '\n';
    for (const auto& [id, attrs] : model.has_entries()) {
        if (attrs.empty())
            continue;
        out << "has " << id << ':';
        for (int a : attrs)
            out << ' ' << a;
        out << '\n';
    }
    for (const auto& [id, attrs] : model.cares_entries()) {
        if (attrs.empty())
            continue;
        out << "cares " << id << ':';
        for (int a : attrs)
            out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

AttributeModel complete_model(const ParsedModel& parsed, const PreferenceProfile& profile) {
    for (const auto& [id, attrs] : parsed.has_entries)
        if (!profile.has_alternative(id))
            throw InputError("model has-entry for unknown alternative '" + id + "'");
    for (const auto& [id, attrs] : parsed.cares_entries)
        if (!profile.has_voter(id))
            throw InputError("model cares-entry for unknown voter '" + id + "'");

    AttributeModel model;
    model.k = parsed.k;
    for (const auto& alt : profile.alternatives())
        model.set_has(alt, {});
    for (const auto& voter : profile.voters())
        model.set_cares(voter, {});
    for (const auto& [id, attrs] : parsed.has_entries)
        model.set_has(id, attrs);
    for (const auto& [id, attrs] : parsed.cares_entries)
        model.set_cares(id, attrs);
    return model;
}

GraphInstance parse_edge_list(const std::string& text) {
    GraphInstance graph;
    std::set<std::string> declared;
    for (const Line& line : significant_lines(text)) {
        const std::vector<std::string> tokens = split_ws(line.text);
        if (tokens.size() != 2)
            fail(line.number, "expected 'u w'");
        for (const auto& v : tokens) {
            if (declared.insert(v).second)
                graph.vertices.push_back(v);
        }
        graph.edges.emplace_back(tokens[0], tokens[1]);
    }
    return graph;
}

CnfInstance parse_clause_list(const std::string& text) {
    CnfInstance cnf;
    for (const Line& line : significant_lines(text)) {
        const std::vector<std::string> tokens = split_ws(line.text);
        if (tokens.size() != 3)
            fail(line.number, "expected three literals per clause");
        std::array<int, 3> clause{};
        for (int i = 0; i < 3; ++i) {
            clause[i] = parse_int(tokens[i], line.number, "literal");
            if (clause[i] == 0)
                fail(line.number, "literal 0 is not allowed");
            cnf.num_vars = std::max(cnf.num_vars, std::abs(clause[i]));
        }
        cnf.clauses.push_back(clause);
    }
    if (cnf.clauses.empty())
        throw InputError("clause list is empty");
    return cnf;
}

Rxc3Instance parse_rxc3(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty())
        throw InputError("rxc3 file is empty");
    Rxc3Instance instance;
    {
        std::string key, rest;
        if (!split_id(lines[0].text, key, rest) || key != "q")
            fail(lines[0].number, "expected 'q: <int>' header");
        instance.q = parse_int(rest, lines[0].number, "q");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> tokens = split_ws(lines[i].text);
        if (tokens.size() != 3)
            fail(lines[i].number, "expected three elements per subset");
        std::array<int, 3> subset{};
        for (int j = 0; j < 3; ++j)
            subset[j] = parse_int(tokens[j], lines[i].number, "element");
        instance.subsets.push_back(subset);
    }
    return instance;
}

} // namespace bam

#include "bam/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bam/bounds.hpp"
#include "bam/io.hpp"
#include "bam/partial.hpp"
#include "bam/search.hpp"
#include "bam/special.hpp"
#include "bam/twosat.hpp"
#include "bam/twovoter.hpp"

namespace bam {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << content;
}

Json witness_json(const AttributeModel& model) {
    Json has = Json::object();
    for (const auto& [id, attrs] : model.has_entries())
        has[id] = attrs;
    Json cares = Json::object();
    for (const auto& [id, attrs] : model.cares_entries())
        cares[id] = attrs;
    return Json{{"k", model.k}, {"has", has}, {"cares", cares}};
}

// Stats stay run-to-run stable in JSON: node counts only, no wall time.
Json stats_json(const SearchStats& stats) { return Json{{"nodes", stats.nodes}}; }

Json explain_json(const PreferenceProfile& profile, const TypeScores& ts) {
    Json alts = Json::array();
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        alts.push_back(Json{{"id", profile.alternative_name(c)},
                            {"lambda_u", ts.lambda_u[c]},
                            {"lambda_w", ts.lambda_w[c]},
                            {"t_u", ts.t_u[c]},
                            {"t_w", ts.t_w[c]},
                            {"t_uw", ts.t_uw[c]},
                            {"conv", ts.conv[c]},
                            {"S_u", ts.s_u[c]},
                            {"S_w", ts.s_w[c]},
                            {"S_uw", ts.s_uw[c]}});
    }
    return Json{{"M_u", ts.m_u}, {"M_w", ts.m_w}, {"M_uw", ts.m_uw}, {"k", ts.k},
                {"alternatives", alts}};
}

void print_explain(const PreferenceProfile& profile, const TypeScores& ts, std::ostream& out) {
    out << "M_u: " << ts.m_u << "\nM_w: " << ts.m_w << "\nM_uw: " << ts.m_uw << '\n';
    out << "alt lambda_u lambda_w t_u t_w t_uw conv S_u S_w S_uw\n";
    for (int c = 0; c < profile.num_alternatives(); ++c) {
        out << profile.alternative_name(c) << ' ' << ts.lambda_u[c] << ' ' << ts.lambda_w[c] << ' '
            << ts.t_u[c] << ' ' << ts.t_w[c] << ' ' << ts.t_uw[c] << ' ' << ts.conv[c] << ' '
            << ts.s_u[c] << ' ' << ts.s_w[c] << ' ' << ts.s_uw[c] << '\n';
    }
}

struct Options {
    std::string profile_path;
    std::string model_path;
    int k = 0;
    int seed = 0;
    bool json = false;
    bool explain = false;
    bool no_symmetry = false;
    std::uint64_t time_limit_ms = 0;
    std::uint64_t node_limit = 0;
    int threads = 1;
    std::string engine = "auto";
    std::string kind;
    std::string in_path;
    std::string out_profile;
    std::string out_model;

    SearchConfig config() const {
        SearchConfig cfg;
        if (node_limit > 0)
            cfg.node_limit = node_limit;
        if (time_limit_ms > 0)
            cfg.time_limit_ms = time_limit_ms;
        cfg.symmetry_breaking = !no_symmetry;
        cfg.threads = threads;
        return cfg;
    }
};

std::unordered_map<std::string, AttrSet> to_map(const std::vector<std::pair<std::string, AttrSet>>& entries) {
    std::unordered_map<std::string, AttrSet> map;
    for (const auto& [id, attrs] : entries)
        map.emplace(id, attrs);
    return map;
}

int emit_outcome(const Options& opt, const SolveOutcome& outcome, int k, std::ostream& out) {
    if (opt.json) {
        Json record{{"decision", outcome.yes ? "YES" : "NO"}, {"k", k}};
        if (outcome.witness)
            record["witness"] = witness_json(*outcome.witness);
        if (!outcome.yes && !outcome.reason.empty())
            record["reason"] = outcome.reason;
        record["stats"] = stats_json(outcome.stats);
        out << record.dump() << '\n';
    } else {
        if (outcome.yes)
            out << "YES\n";
        else if (outcome.reason.empty())
            out << "NO\n";
        else
            out << "NO (" << outcome.reason << ")\n";
        out << "stats: nodes=" << outcome.stats.nodes << '\n';
    }
    return outcome.yes ? kExitYes : kExitNo;
}

// The uniform-length rule applies when every constraining order has length
// exactly k+1.
bool uniform_length_applies(const PreferenceProfile& profile, int k) {
    bool any = false;
    for (const auto& order : profile.orders()) {
        const int len = static_cast<int>(order.size());
        if (len < 2)
            continue;
        if (len != k + 1)
            return false;
        any = true;
    }
    return any || k == 0;
}

SolveOutcome solve_two_voter_decision(const PreferenceProfile& profile, int k) {
    TwoVoterResult two = min_k_two_voters(profile);
    if (two.k > k)
        return SolveOutcome::no("minimum k for two voters is " + std::to_string(two.k));
    two.witness.k = k;
    return SolveOutcome::with(std::move(two.witness));
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    const AttributeModel model = complete_model(parse_model(read_file(opt.model_path)), profile);
    const VerifyResult result = verify(profile, model);
    if (opt.json) {
        Json record{{"decision", result.ok}};
        if (result.violation)
            record["violation"] = Json{{"voter", result.violation->voter},
                                       {"preferred", result.violation->preferred},
                                       {"other", result.violation->other}};
        out << record.dump() << '\n';
    } else if (result.ok) {
        out << "true\n";
    } else {
        out << "false (voter " << result.violation->voter << ": " << result.violation->preferred
            << " > " << result.violation->other << ")\n";
    }
    return result.ok ? kExitYes : kExitNo;
}

int cmd_solve(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    if (opt.k < 0)
        throw InputError("--k must be non-negative");
    const SearchConfig cfg = opt.config();

    SolveOutcome outcome;
    if (opt.engine == "oracle") {
        outcome = oracle_solve(profile, opt.k, cfg);
    } else if (opt.engine == "dfs") {
        outcome = dfs_solve(profile, opt.k, cfg);
    } else if (opt.engine == "twosat") {
        if (opt.k > 2)
            throw InputError("--engine twosat requires k <= 2");
        outcome = solve_k_le_2(profile, opt.k);
    } else if (opt.engine == "uniform") {
        outcome = uniform_length_solve(profile, opt.k);
    } else if (opt.engine == "twovoter") {
        if (profile.num_voters() != 2)
            throw InputError("--engine twovoter requires exactly two voters");
        outcome = solve_two_voter_decision(profile, opt.k);
    } else if (opt.engine == "auto") {
        if (profile.num_voters() == 2)
            outcome = solve_two_voter_decision(profile, opt.k);
        else if (opt.k <= 2)
            outcome = solve_k_le_2(profile, opt.k);
        else if (uniform_length_applies(profile, opt.k))
            outcome = uniform_length_solve(profile, opt.k);
        else
            outcome = dfs_solve(profile, opt.k, cfg);
    } else {
        throw InputError("unknown engine '" + opt.engine + "'");
    }
    return emit_outcome(opt, outcome, opt.k, out);
}

int cmd_min_k(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    const SearchConfig cfg = opt.config();

    MinKResult result;
    if (opt.engine == "auto") {
        result = solve_min_k(profile, cfg);
    } else if (opt.engine == "dfs" || opt.engine == "oracle") {
        // Forced general iteration, for differential testing.
        SearchConfig forced = cfg;
        forced.oracle_mode = opt.engine == "oracle";
        const int to = upper_bound_k(profile);
        bool found = false;
        for (int k = lower_bound_k(profile); k <= to && !found; ++k) {
            SolveOutcome outcome = dfs_solve(profile, k, forced);
            result.stats.nodes += outcome.stats.nodes;
            if (outcome.yes) {
                result.k = k;
                result.witness = std::move(*outcome.witness);
                found = true;
            }
        }
        if (!found)
            throw InputError("internal: upper bound exhausted");
    } else {
        throw InputError("min-k supports --engine auto|dfs|oracle");
    }

    if (!opt.out_model.empty() || !opt.model_path.empty())
        write_file(opt.out_model.empty() ? opt.model_path : opt.out_model,
                   serialize_model(result.witness));

    const bool two = profile.num_voters() == 2;
    if (opt.json) {
        Json record{{"decision", "YES"}, {"k", result.k}, {"witness", witness_json(result.witness)},
                    {"stats", stats_json(result.stats)}};
        if (opt.explain && two)
            record["explain"] = explain_json(profile, value_computation(profile));
        out << record.dump() << '\n';
    } else {
        out << result.k << '\n';
        if (opt.explain && two)
            print_explain(profile, value_computation(profile), out);
    }
    return kExitYes;
}

int cmd_solve_cares(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    const ParsedModel parsed = parse_model(read_file(opt.model_path));
    if (!parsed.cares_only())
        throw InputError("solve-cares expects a cares-only model file");
    const SolveOutcome outcome = solve_cares_given(profile, to_map(parsed.cares_entries), parsed.k);
    return emit_outcome(opt, outcome, parsed.k, out);
}

int cmd_solve_has(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    const ParsedModel parsed = parse_model(read_file(opt.model_path));
    if (!parsed.has_only())
        throw InputError("solve-has expects a has-only model file");
    const SolveOutcome outcome = solve_has_given(profile, to_map(parsed.has_entries), parsed.k);
    return emit_outcome(opt, outcome, parsed.k, out);
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    const PreferenceProfile profile = parse_profile(read_file(opt.profile_path));
    const int lower = lower_bound_k(profile);
    const int upper = upper_bound_k(profile);
    if (opt.json) {
        out << Json{{"bounds", Json{{"lower_k", lower}, {"upper_k", upper}}}}.dump() << '\n';
    } else {
        out << "lower_k: " << lower << "\nupper_k: " << upper << '\n';
    }
    return kExitYes;
}

int cmd_generate(const Options& opt, std::ostream& out) {
    const std::string input = read_file(opt.in_path);
    PreferenceProfile profile;
    int k = 0;
    std::unordered_map<std::string, AttrSet> given;
    bool has_given_map = false;
    bool given_is_has = false;

    if (opt.kind == "coloring") {
        GeneratedBam gen = coloring_to_bam(parse_edge_list(input));
        profile = std::move(gen.profile);
        k = gen.k;
    } else if (opt.kind == "sat-m3" || opt.kind == "sat-k6") {
        const CnfInstance cnf = parse_clause_list(input);
        GeneratedPartial gen = opt.kind == "sat-m3" ? sat_to_cares_m3(cnf) : sat_to_cares_k6(cnf);
        profile = std::move(gen.profile);
        k = gen.k;
        given = std::move(gen.given);
        has_given_map = true;
    } else if (opt.kind == "rxc3") {
        GeneratedPartial gen = rxc3_to_has(parse_rxc3(input));
        profile = std::move(gen.profile);
        k = gen.k;
        given = std::move(gen.given);
        has_given_map = true;
        given_is_has = true;
    } else {
        throw InputError("unknown generator '" + opt.kind + "'");
    }

    if (opt.out_profile.empty())
        throw InputError("generate requires --out-profile");
    write_file(opt.out_profile, serialize_profile(profile));

    if (has_given_map) {
        if (opt.out_model.empty())
            throw InputError("generate " + opt.kind + " requires --out-model");
        AttributeModel partial;
        partial.k = k;
        if (given_is_has) {
            for (const auto& alt : profile.alternatives())
                if (auto it = given.find(alt); it != given.end())
                    partial.set_has(alt, it->second);
        } else {
            for (const auto& voter : profile.voters())
                if (auto it = given.find(voter); it != given.end())
                    partial.set_cares(voter, it->second);
        }
        write_file(opt.out_model, serialize_model(partial));
    } else if (!opt.out_model.empty()) {
        throw InputError("generate coloring produces no model file");
    }

    if (opt.json) {
        Json record{{"kind", opt.kind},
                    {"k", k},
                    {"alternatives", profile.num_alternatives()},
                    {"voters", profile.num_voters()},
                    {"profile_path", opt.out_profile}};
        if (has_given_map)
            record["model_path"] = opt.out_model;
        out << record.dump() << '\n';
    } else {
        out << "k: " << k << '\n';
    }
    return kExitYes;
}

void add_common(CLI::App* cmd, Options& opt, bool profile_required = true) {
    cmd->add_option("--profile", opt.profile_path, "profile file")->required(profile_required);
    cmd->add_flag("--json", opt.json, "emit a single JSON object");
    cmd->add_option("--seed", opt.seed, "seed (reserved; results are deterministic)");
    cmd->add_option("--time-limit-ms", opt.time_limit_ms, "abort search after this many ms");
    cmd->add_option("--node-limit", opt.node_limit, "abort search after this many nodes");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean attribute model solver"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a model against a profile");
    add_common(verify_cmd, opt);
    verify_cmd->add_option("--model", opt.model_path, "model file")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "decide existence of a k-attribute model");
    add_common(solve_cmd, opt);
    solve_cmd->add_option("--k", opt.k, "attribute budget")->required();
    solve_cmd->add_option("--engine", opt.engine, "auto|oracle|dfs|twosat|uniform|twovoter");
    solve_cmd->add_flag("--no-symmetry-breaking", opt.no_symmetry, "disable column symmetry breaking");
    solve_cmd->add_option("--threads", opt.threads, "oracle worker count")->check(CLI::PositiveNumber);

    CLI::App* mink_cmd = app.add_subcommand("min-k", "minimize the number of attributes");
    add_common(mink_cmd, opt);
    mink_cmd->add_option("--model", opt.model_path, "write the witness model here");
    mink_cmd->add_option("--engine", opt.engine, "auto|dfs|oracle");
    mink_cmd->add_flag("--explain", opt.explain, "print the two-voter value table");
    mink_cmd->add_flag("--no-symmetry-breaking", opt.no_symmetry, "disable column symmetry breaking");

    CLI::App* cares_cmd = app.add_subcommand("solve-cares", "complete a given cares-function");
    add_common(cares_cmd, opt);
    cares_cmd->add_option("--model", opt.model_path, "cares-only model file")->required();

    CLI::App* has_cmd = app.add_subcommand("solve-has", "complete a given has-function");
    add_common(has_cmd, opt);
    has_cmd->add_option("--model", opt.model_path, "has-only model file")->required();

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "print lower/upper bounds on k");
    add_common(bounds_cmd, opt);

    CLI::App* gen_cmd = app.add_subcommand("generate", "emit a hardness-construction instance");
    gen_cmd->add_option("kind", opt.kind, "coloring|sat-m3|sat-k6|rxc3")->required();
    gen_cmd->add_option("--in", opt.in_path, "source instance file")->required();
    gen_cmd->add_option("--out-profile", opt.out_profile, "profile output path")->required();
    gen_cmd->add_option("--out-model", opt.out_model, "partial model output path");
    gen_cmd->add_flag("--json", opt.json, "emit a single JSON object");
    gen_cmd->add_option("--seed", opt.seed, "seed (reserved)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bam");
    for (const auto& arg : args)
        argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(opt, out);
        if (app.got_subcommand(solve_cmd))
            return cmd_solve(opt, out);
        if (app.got_subcommand(mink_cmd))
            return cmd_min_k(opt, out);
        if (app.got_subcommand(cares_cmd))
            return cmd_solve_cares(opt, out);
        if (app.got_subcommand(has_cmd))
            return cmd_solve_has(opt, out);
        if (app.got_subcommand(bounds_cmd))
            return cmd_bounds(opt, out);
        if (app.got_subcommand(gen_cmd))
            return cmd_generate(opt, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const LookupError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ExtractionError& e) {
        err << "extraction error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    err << "error: no command\n";
    return kExitInput;
}

} // namespace bam

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bam/bounds.hpp"
#include "bam/cli.hpp"
#include "bam/io.hpp"
#include "helpers.hpp"

using namespace bam;
using namespace bamtest;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "bam_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_profile") {
    SUBCASE("basic profile with comments") {
        const PreferenceProfile profile = parse_profile(
            "# example\nalternatives: a b\nvoter v: a > b\n");
        CHECK(profile.num_alternatives() == 2);
        CHECK(profile.num_voters() == 1);
        CHECK(profile.order(0) == std::vector<int>{0, 1});
    }
    SUBCASE("empty order and colons in identifiers") {
        const PreferenceProfile profile = parse_profile(
            "alternatives: x:1 x:2\nvoter ve:1:2: x:1 > x:2\nvoter v2:\n");
        CHECK(profile.voter_name(0) == "ve:1:2");
        CHECK(profile.order(1).empty());
    }
    SUBCASE("duplicate in order reports the line") {
        try {
            parse_profile("alternatives: a b\nvoter v: a > a\n");
            FAIL("expected InputError");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("unknown alternative reports the line") {
        CHECK_THROWS_AS(parse_profile("alternatives: a\nvoter v: b\n"), InputError);
    }
}

TEST_CASE("parse_model canonicalizes") {
    const ParsedModel parsed = parse_model("k: 3\nhas a: 2 1\ncares v: 3\n");
    CHECK(parsed.k == 3);
    CHECK(parsed.has_entries.at(0).second == AttrSet{1, 2});
    CHECK_FALSE(parsed.has_only());
    CHECK_FALSE(parsed.cares_only());

    CHECK_THROWS_AS(parse_model("k: 2\nhas a: 5\n"), InputError);
    CHECK_THROWS_AS(parse_model("has a: 1\n"), InputError); // missing k line
}

TEST_CASE("round trips are canonical") {
    std::mt19937_64 rng(8080);
    for (int round = 0; round < 50; ++round) {
        const PreferenceProfile profile = random_profile(rng, 4, 4, 4);
        const std::string text = serialize_profile(profile);
        CHECK(serialize_profile(parse_profile(text)) == text);

        const AttributeModel model = trivial_bam(profile);
        const std::string model_text = serialize_model(model);
        const ParsedModel parsed = parse_model(model_text);
        const AttributeModel completed = complete_model(parsed, profile);
        CHECK(serialize_model(completed) == model_text);
        CHECK(verify(profile, completed).ok);
    }
}

TEST_CASE("cli verify") {
    const auto profile_path = temp_file("two_voter.profile",
                                        "alternatives: c1 c2 c3 c4 c5\n"
                                        "voter u: c1 > c2 > c3 > c4 > c5\n"
                                        "voter w: c4 > c3\n");
    const auto model_path = temp_file("two_voter.model",
                                      "k: 4\n"
                                      "has c1: 1 2 3 4\n"
                                      "has c2: 2 3 4\n"
                                      "has c3: 3 4\n"
                                      "has c4: 1\n"
                                      "cares u: 1 2 3 4\n"
                                      "cares w: 1 2\n");
    const CliRun good = run({"verify", "--profile", profile_path.string(), "--model",
                             model_path.string()});
    CHECK(good.exit_code == 0);
    CHECK(good.out == "true\n");

    const auto bad_model = temp_file("two_voter_bad.model", "k: 4\nhas c1: 1\nhas c2: 1\n"
                                                            "cares u: 1\n");
    const CliRun bad = run({"verify", "--profile", profile_path.string(), "--model",
                            bad_model.string(), "--json"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("\"decision\":false") != std::string::npos);
}

TEST_CASE("cli min-k prints the minimum") {
    const auto profile_path = temp_file("cycle3.profile",
                                        "alternatives: c1 c2 c3\n"
                                        "voter v1: c1 > c2\n"
                                        "voter v2: c2 > c3\n"
                                        "voter v3: c3 > c1\n");
    const CliRun run_result = run({"min-k", "--profile", profile_path.string()});
    CHECK(run_result.exit_code == 0);
    CHECK(run_result.out == "3\n");
}

TEST_CASE("cli solve reports the length reason") {
    const auto profile_path = temp_file("long.profile",
                                        "alternatives: a b c d\n"
                                        "voter v: a > b > c > d\n");
    const CliRun result = run({"solve", "--profile", profile_path.string(), "--k", "2"});
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("order length exceeds k+1") != std::string::npos);
}

TEST_CASE("cli rejects malformed input with exit 2") {
    const auto profile_path = temp_file("broken.profile", "alternatives: a\nvoter v: a > a\n");
    const CliRun result = run({"solve", "--profile", profile_path.string(), "--k", "1"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("line 2") != std::string::npos);

    const CliRun missing = run({"solve", "--profile", "/nonexistent/x.profile", "--k", "1"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli resource limit maps to exit 3") {
    const auto profile_path = temp_file("cycle3b.profile",
                                        "alternatives: c1 c2 c3\n"
                                        "voter v1: c1 > c2\n"
                                        "voter v2: c2 > c3\n"
                                        "voter v3: c3 > c1\n");
    const CliRun result = run({"solve", "--profile", profile_path.string(), "--k", "3",
                               "--engine", "dfs", "--node-limit", "1"});
    CHECK(result.exit_code == 3);
}

TEST_CASE("cli generate and solve round trip") {
    const auto graph_path = temp_file("triangle.graph", "1 2\n2 3\n1 3\n");
    const auto dir = std::filesystem::temp_directory_path() / "bam_tests";
    const auto profile_path = (dir / "triangle.profile").string();

    const CliRun gen = run({"generate", "coloring", "--in", graph_path.string(),
                            "--out-profile", profile_path, "--json"});
    CHECK(gen.exit_code == 0);
    CHECK(gen.out.find("\"k\":3") != std::string::npos);

    const CliRun solve = run({"solve", "--profile", profile_path, "--k", "3", "--engine", "dfs"});
    CHECK(solve.exit_code == 0);

    const auto cnf_path = temp_file("formula.cnf", "1 -2 3\n-1 2 3\n");
    const auto cnf_profile = (dir / "formula.profile").string();
    const auto cnf_model = (dir / "formula.model").string();
    const CliRun gen_sat = run({"generate", "sat-m3", "--in", cnf_path.string(),
                                "--out-profile", cnf_profile, "--out-model", cnf_model});
    CHECK(gen_sat.exit_code == 0);
    const CliRun cares = run({"solve-cares", "--profile", cnf_profile, "--model", cnf_model});
    CHECK(cares.exit_code == 0);

    const auto rxc3_path = temp_file("cover.rxc3", "q: 1\n1 2 3\n1 2 3\n1 2 3\n");
    const auto rxc3_profile = (dir / "cover.profile").string();
    const auto rxc3_model = (dir / "cover.model").string();
    const CliRun gen_cover = run({"generate", "rxc3", "--in", rxc3_path.string(),
                                  "--out-profile", rxc3_profile, "--out-model", rxc3_model});
    CHECK(gen_cover.exit_code == 0);
    const CliRun has = run({"solve-has", "--profile", rxc3_profile, "--model", rxc3_model});
    CHECK(has.exit_code == 0);
}

TEST_CASE("cli min-k explain exposes the two-voter values") {
    const auto profile_path = temp_file("explain.profile",
                                        "alternatives: c1 c2 c3 c4 c5\n"
                                        "voter u: c1 > c2 > c3 > c4 > c5\n"
                                        "voter w: c4 > c3\n");
    const CliRun result = run({"min-k", "--profile", profile_path.string(), "--explain", "--json"});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("\"M_u\":2") != std::string::npos);
    CHECK(result.out.find("\"M_w\":0") != std::string::npos);
    CHECK(result.out.find("\"M_uw\":2") != std::string::npos);
    CHECK(result.out.find("\"k\":4") != std::string::npos);
}

TEST_CASE("cli json output is stable across runs") {
    const auto profile_path = temp_file("stable.profile",
                                        "alternatives: a b c\n"
                                        "voter v1: a > b\n"
                                        "voter v2: b > c\n");
    const CliRun first = run({"solve", "--profile", profile_path.string(), "--k", "2", "--json",
                              "--seed", "7"});
    const CliRun second = run({"solve", "--profile", profile_path.string(), "--k", "2", "--json",
                               "--seed", "7"});
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

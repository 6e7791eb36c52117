#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pfb/cli.hpp"
#include "pfb/report.hpp"

using namespace pfb;
using nlohmann::json;

namespace {

cli::RunResult run(std::initializer_list<const char*> args)
{
    return cli::run(std::vector<std::string>(args.begin(), args.end()));
}

std::pair<int, std::string> run_binary(const std::string& args)
{
    const std::string cmd = std::string(PFB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string family_path(const char* name) { return (std::filesystem::current_path() / name).string(); }

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("documented commands")
    {
        const auto irr = run({"irr", "--q", "13", "--g", "2", "--n", "6"});
        CHECK(irr.status == cli::kComputed);
        CHECK(first_line(irr.out) == "irreducible");

        const auto order = run({"order", "--q", "13", "--a", "2"});
        CHECK(order.status == cli::kComputed);
        CHECK(order.out == "12\n");

        const std::string path = family_path("cli_fam.json");
        const auto fam = run({"family-gen", "--kind", "dirichlet", "--count", "3", "--out", path.c_str()});
        CHECK(fam.status == cli::kComputed);
        const Family written = read_family([&] {
            std::ifstream in(path);
            return std::string(std::istreambuf_iterator<char>(in), {});
        }());
        REQUIRE(written.entries.size() == 3);
        CHECK(written.entries[0].q.q() == 5);
        CHECK(written.entries[1].q.q() == 13);
        CHECK(written.entries[2].q.q() == 61);
    }

    TEST_CASE("format_report examples")
    {
        const FieldElem two = FieldElem::residue(build_field(13, 1), 2);
        const std::string text = format_report(analyze_binomial(two, 5), OutputMode::text);
        CHECK(text.find("failed: prime-divisor-condition") != std::string::npos);

        Verdict v;
        v.outcome = Outcome::holds;
        v.threshold = 2;
        CHECK(format_report(v, OutputMode::text).find("holds for U-almost all k (from k=2)") != std::string::npos);

        const std::string closure = format_report(closure_check(two, 12), OutputMode::json);
        CHECK(closure.find("\"hypothesis_met\":true") != std::string::npos);
        CHECK(json::parse(closure)["hypothesis_met"] == true);
    }

    TEST_CASE("binomial JSON has the documented flat keys")
    {
        const auto r = run({"irr", "--q", "5^2", "--g", "0,1", "--n", "3", "--json"});
        REQUIRE(r.status == cli::kComputed);
        const json j = json::parse(r.out);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it)
            keys.push_back(it.key());
        std::sort(keys.begin(), keys.end());
        std::vector<std::string> expected{"q", "p", "t", "g", "n", "order_e", "ln_verdict", "karp_verdict",
                                          "oracle_verdict", "failed_condition"};
        std::sort(expected.begin(), expected.end());
        CHECK(keys == expected);
        CHECK(j["oracle_verdict"].is_null());
        CHECK(j["q"] == "25");
        CHECK(j["t"] == 2);
    }

    TEST_CASE("every subcommand emits one JSON document with --json")
    {
        const std::string path = family_path("cli_json_fam.json");
        const std::vector<std::vector<std::string>> cmds = {
            {"irr", "--q", "13", "--g", "2", "--n", "6", "--json"},
            {"irr", "--q", "13", "--g", "2", "--n", "5", "--oracle", "--json"},
            {"order", "--q", "9", "--a", "1,1", "--json"},
            {"gen", "--q", "13", "--json"},
            {"family-gen", "--kind", "paper", "--count", "3", "--out", path, "--json"},
            {"family-check", "--file", path, "--n", "6", "--json"},
            {"equiv", "--file", path, "--n", "6", "--json"},
            {"tower", "--q", "13", "--g", "2", "--degrees", "2,4", "--json"},
            {"closure", "--q", "13", "--g", "2", "--N", "12", "--json"},
        };
        for (const auto& c : cmds) {
            const auto r = cli::run(c);
            CAPTURE(c[0]);
            REQUIRE(r.status == cli::kComputed);
            CHECK(json::accept(r.out));
            CHECK(r.out.back() == '\n');
            CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
        }
    }

    TEST_CASE("exit status matrix")
    {
        struct Case {
            std::vector<std::string> args;
            int status;
        };
        const std::vector<Case> cases = {
            {{"irr", "--q", "13", "--g", "2", "--n", "5"}, cli::kComputed},
            {{"irr", "--q", "13", "--g", "2", "--n", "6", "--oracle"}, cli::kComputed},
            {{}, cli::kUsageError},
            {{"frobnicate"}, cli::kUsageError},
            {{"irr", "--q", "13", "--g", "2"}, cli::kUsageError},
            {{"irr", "--q", "13", "--g", "2", "--n", "6", "--bogus"}, cli::kUsageError},
            {{"irr", "--q", "12", "--g", "2", "--n", "6"}, cli::kUsageError},
            {{"irr", "--q", "13", "--g", "13", "--n", "6"}, cli::kUsageError},
            {{"irr", "--q", "13", "--g", "2", "--n", "six"}, cli::kUsageError},
            {{"order", "--q", "9", "--a", "1,1,1"}, cli::kUsageError},
            {{"family-gen", "--kind", "other", "--count", "3", "--out", "x.json"}, cli::kUsageError},
            {{"family-check", "--file", "/nonexistent/fam.json", "--n", "6"}, cli::kUsageError},
            {{"tower", "--q", "13", "--g", "2", "--degrees", "2,x"}, cli::kUsageError},
            {{"irr", "--q", "13", "--g", "0", "--n", "6"}, cli::kComputationError},
            {{"irr", "--q", "13", "--g", "2", "--n", "0"}, cli::kComputationError},
            {{"order", "--q", "13", "--a", "0"}, cli::kComputationError},
            {{"tower", "--q", "13", "--g", "2", "--degrees", "5"}, cli::kComputationError},
            {{"tower", "--q", "13", "--g", "2", "--degrees", "2,3"}, cli::kComputationError},
            {{"closure", "--q", "13", "--g", "2", "--N", "100"}, cli::kComputationError},
            {{"family-gen", "--kind", "paper", "--count", "5", "--out", "x.json"}, cli::kComputationError},
        };
        for (const auto& c : cases) {
            const auto r = cli::run(c.args);
            std::string joined;
            for (const auto& a : c.args)
                joined += a + " ";
            CAPTURE(joined);
            CHECK(r.status == c.status);
            if (r.status != cli::kComputed) {
                CHECK(r.out.empty());
                CHECK_FALSE(r.err.empty());
            }
        }
    }

    TEST_CASE("help exits cleanly")
    {
        const auto r = run({"--help"});
        CHECK(r.status == cli::kComputed);
        CHECK(r.out.find("closure") != std::string::npos);
    }

    TEST_CASE("canonical form round trips through the parser")
    {
        const std::vector<std::vector<std::string>> inputs = {
            {"irr", "--json", "--n", "6", "--g", "2", "--q", "13"},
            {"irr", "--q", "5^2", "--g", "1,1", "--n", "3", "--oracle"},
            {"closure", "--N", "12", "--q", "13", "--g", "2"},
            {"family-gen", "--out", "f.json", "--count", "2", "--kind", "paper"},
            {"tower", "--degrees", "2,4", "--g", "2", "--q", "13", "--json"},
        };
        for (const auto& in : inputs) {
            const cli::Command cmd = cli::parse_command(in);
            std::vector<std::string> tokens;
            std::istringstream ss(cmd.canonical());
            for (std::string t; ss >> t;)
                tokens.push_back(t);
            CHECK(cli::parse_command(tokens) == cmd);
            CHECK(cli::parse_command(tokens).canonical() == cmd.canonical());
        }
        CHECK(cli::parse_command({"irr", "--n", "6", "--q", "13", "--g", "2"}).canonical() == "irr --q 13 --g 2 --n 6");
    }

    TEST_CASE("documented examples are byte-identical across process runs")
    {
        const std::string path = family_path("cli_det_fam.json");
        const std::vector<std::string> cmds = {
            "irr --q 13 --g 2 --n 6",
            "order --q 13 --a 2",
            "family-gen --kind dirichlet --count 3 --out " + path,
            "family-check --file " + path + " --n 6",
            "closure --q 13 --g 2 --N 12 --json",
        };
        for (const auto& c : cmds) {
            const auto a = run_binary(c);
            const auto b = run_binary(c);
            CAPTURE(c);
            CHECK(a.first == 0);
            CHECK(a == b);
            CHECK_FALSE(a.second.empty());
        }
        CHECK(run_binary("irr --q 12 --g 2 --n 6").first == cli::kUsageError);
        CHECK(run_binary("tower --q 13 --g 2 --degrees 5").first == cli::kComputationError);
    }
}

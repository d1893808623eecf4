/*
   Copyright 2026 The chromideal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chromideal/cli.hpp"

using namespace chromideal;
using cli::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

class TempDir {
   public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("chromideal_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

   private:
    fs::path path_;
};

/// Runs the installed binary with stdout and stderr captured to files; returns the exit status.
int run_binary(const std::string& args, const std::string& out_path, const std::string& err_path) {
    const std::string cmd = std::string("\"") + CHROMIDEAL_CLI_PATH + "\" " + args + " > \"" + out_path + "\" 2> \"" + err_path + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> corpus() {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(CHROMIDEAL_DATA_DIR)) {
        const auto ext = entry.path().extension();
        if (ext == ".col" || ext == ".json") files.push_back(entry.path().string());
    }
    std::ranges::sort(files);
    return files;
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

TEST(Cli, SolveCompleteGraphOnFive) {
    const auto j = run_json({"solve", "--gen", "complete:5", "--k", "4"});
    EXPECT_EQ(j["colorable"], false);
    EXPECT_EQ(j["k"], 4);
    EXPECT_EQ(j["field"], "gf:5");
    EXPECT_EQ(j["order"], "grevlex");
    EXPECT_EQ(j["basis_size"], 1);
    EXPECT_TRUE(j["coloring"].is_null());
    EXPECT_TRUE(j["certificate_path"].is_null());
    EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(Cli, ResultSchemaKeyOrder) {
    const auto j = run_json({"solve", "--gen", "cycle:5", "--k", "3"});
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"colorable", "k", "field", "order", "basis_size", "coloring",
                                              "certificate_path", "elapsed_ms"}));
}

TEST(Cli, OracleCompleteGraphOnFour) {
    const auto j = run_json({"oracle", "--gen", "complete:4", "--k", "4"});
    EXPECT_EQ(j["colorable"], true);
    EXPECT_EQ(j["coloring"], json::parse(R"({"1": 0, "2": 1, "3": 2, "4": 3})"));
}

TEST(Cli, DefaultFieldFollowsK) {
    EXPECT_EQ(run_json({"solve", "--gen", "cycle:5", "--k", "3"})["field"], "gf:7");
    EXPECT_EQ(run_json({"solve", "--gen", "cycle:5", "--k", "2"})["field"], "gf:3");
    EXPECT_EQ(run_json({"solve", "--gen", "cycle:5", "--k", "2", "--field", "rational"})["field"], "rational");
}

TEST(Cli, ColorProducesProperColoring) {
    const auto j = run_json({"color", "--gen", "petersen", "--k", "3"});
    ASSERT_EQ(j["colorable"], true);
    const auto c = io::coloring_from_json(j["coloring"], 10);
    EXPECT_TRUE(is_proper(petersen_graph(), c));
    EXPECT_FALSE(run_json({"color", "--gen", "complete:4", "--k", "3"})["colorable"]);
}

TEST(Cli, EncodeListsGenerators) {
    const auto j = run_json({"encode", "--gen", "path:2", "--k", "4"});
    EXPECT_EQ(j["nvars"], 2);
    EXPECT_EQ(j["generators"], json::parse(R"(["x1^4 - 1", "x2^4 - 1", "x1^3 + x1^2*x2 + x1*x2^2 + x2^3"])"));
}

TEST(Cli, GbOfGraphAndOfGeneratorFile) {
    const auto g = run_json({"gb", "--gen", "complete:5"});
    EXPECT_EQ(g["trivial"], true);
    EXPECT_EQ(g["basis"], json::parse(R"(["1"])"));

    TempDir dir;
    io::write_file(dir.file("gens.json"), R"({"nvars": 2, "generators": ["x1^4 - 1", "x2^4 - 1", "x1^3 + x1^2*x2 + x1*x2^2 + x2^3"]})");
    const auto f = run_json({"gb", "--generators", dir.file("gens.json"), "--order", "lex", "--field", "rational"});
    EXPECT_EQ(f["trivial"], false);
    EXPECT_EQ(f["basis"], json::parse(R"(["x1^3 + x1^2*x2 + x1*x2^2 + x2^3", "x2^4 - 1"])"));
}

TEST(Cli, GenRoundTripsThroughFiles) {
    TempDir dir;
    ASSERT_EQ(run({"gen", "--gen", "maximal_planar:12:5", "--output", dir.file("g.json")}).code, 0);
    ASSERT_EQ(run({"gen", "--gen", "maximal_planar:12:5", "--format", "text", "--output", dir.file("g.col")}).code, 0);
    const auto expected = maximal_planar_graph(12, 5);
    EXPECT_EQ(io::read_graph_file(dir.file("g.json")), expected);
    EXPECT_EQ(io::read_graph_file(dir.file("g.col")), expected);
    // --seed supplies the seed when the spec omits it.
    ASSERT_EQ(run({"gen", "--gen", "maximal_planar:12", "--seed", "5", "--output", dir.file("h.json")}).code, 0);
    EXPECT_EQ(io::read_graph_file(dir.file("h.json")), expected);
}

TEST(Cli, TextFormat) {
    const auto r = run({"solve", "--gen", "complete:5", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "colorable: false\nk: 4\nfield: gf:5\norder: grevlex\nbasis_size: 1\ncoloring: null\n"
                     "certificate_path: null\nelapsed_ms: 0\n");
    const auto c = run({"oracle", "--gen", "path:3", "--k", "2", "--format", "text"});
    EXPECT_NE(c.out.find("coloring: 1:0 2:1 3:0\n"), std::string::npos) << c.out;
}

TEST(Cli, OutputFile) {
    TempDir dir;
    const auto r = run({"solve", "--gen", "complete:4", "--output", dir.file("r.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(json::parse(io::read_file(dir.file("r.json")))["colorable"], true);
}

TEST(Cli, DimacsWarningsGoToDiagnostics) {
    TempDir dir;
    io::write_file(dir.file("g.col"), "p edge 3 7\ne 1 2\n");
    const auto r = run({"solve", "--input", dir.file("g.col")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Certificates

TEST(Cli, CertifyThenVerifyInfeasible) {
    TempDir dir;
    ASSERT_EQ(run({"encode", "--gen", "complete:5", "--output", dir.file("g.json")}).code, 0);
    const auto r = run({"certify", "--gen", "complete:5", "--output", dir.file("c.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto summary = json::parse(r.out);
    EXPECT_EQ(summary["colorable"], false);
    EXPECT_EQ(summary["certificate_path"], dir.file("c.json"));
    EXPECT_TRUE(json::parse(io::read_file(dir.file("c.json"))).is_array());
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("c.json")})["valid"], true);

    // Perturb the first cofactor.
    auto cert = json::parse(io::read_file(dir.file("c.json")));
    cert[0] = cert[0].get<std::string>() + " + 1";
    io::write_file(dir.file("bad.json"), cert.dump());
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("bad.json")})["valid"], false);
}

TEST(Cli, CertifyThenVerifyColoring) {
    TempDir dir;
    ASSERT_EQ(run({"encode", "--gen", "wheel:6", "--k", "3", "--output", dir.file("g.json")}).code, 0);
    ASSERT_EQ(run({"certify", "--gen", "wheel:6", "--k", "3", "--output", dir.file("c.json")}).code, 0);
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("c.json")})["valid"], true);
}

TEST(Cli, CertifyOverRationals) {
    TempDir dir;
    ASSERT_EQ(run({"encode", "--gen", "cycle:5", "--k", "2", "--field", "rational", "--output", dir.file("g.json")}).code, 0);
    ASSERT_EQ(run({"certify", "--gen", "cycle:5", "--k", "2", "--field", "rational", "--output", dir.file("c.json")}).code, 0);
    EXPECT_EQ(json::parse(io::read_file(dir.file("c.json"))).size(), 10u);
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("c.json")})["valid"], true);
}

TEST(Cli, CertifyWithoutOutputPrintsCertificate) {
    const auto r = run({"certify", "--gen", "complete:4"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["k"], 4);
    EXPECT_TRUE(j.contains("coloring"));
}

TEST(Cli, VerifyRejectsMalformedCertificates) {
    TempDir dir;
    ASSERT_EQ(run({"encode", "--gen", "complete:4", "--output", dir.file("g.json")}).code, 0);
    io::write_file(dir.file("bad.json"), R"({"k": 4, "coloring": {"1": 0, "2": 0, "3": 1, "4": 2}})");
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("bad.json")})["valid"], false);
    io::write_file(dir.file("short.json"), R"(["1"])");
    EXPECT_EQ(run_json({"verify", "--generators", dir.file("g.json"), "--certificate", dir.file("short.json")})["valid"], false);
}

// ---------------------------------------------------------------------------
// Errors and exit codes

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"solve"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--input", "x.col"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--field", "gf:7"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--field", "gf:9"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--field", "reals"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--order", "revlex"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--k", "0"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--max-pairs", "0"}).code, 1);
    EXPECT_EQ(run({"solve", "--gen", "complete:3", "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"solve", "--input", "/nonexistent/graph.col"}).code, 1);
    EXPECT_EQ(run({"color", "--gen", "complete:3", "--field", "rational"}).code, 1);
    EXPECT_EQ(run({"verify", "--generators", "g.json"}).code, 1);
    const auto r = run({"solve", "--gen", "cycle:2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SelfLoopInInputIsAnError) {
    TempDir dir;
    io::write_file(dir.file("loop.col"), "p edge 2 1\ne 1 1\n");
    const auto r = run({"solve", "--input", dir.file("loop.col")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("self-loop"), std::string::npos);
}

TEST(Cli, BudgetExceededExitsWithTwo) {
    const auto r = run({"solve", "--gen", "petersen", "--k", "3", "--max-pairs", "10"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsCleanly) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("solve"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Corpus and the binary

TEST(Cli, SolveAgreesWithOracleOnCorpus) {
    const auto files = corpus();
    ASSERT_GE(files.size(), 8u);
    for (const auto& path : files)
        for (const std::string k : {"2", "3", "4"}) {
            // Four colors on these two take minutes; their k = 4 answer is covered by the oracle alone.
            if (k == "4" && (path.ends_with("petersen.json") || path.ends_with("icosahedron.col"))) continue;
            const auto s = run_json({"solve", "--input", path, "--k", k});
            const auto o = run_json({"oracle", "--input", path, "--k", k});
            EXPECT_EQ(s["colorable"], o["colorable"]) << path << " k=" << k;
        }
}

TEST(Cli, BinaryIsDeterministic) {
    TempDir dir;
    const std::vector<std::string> commands{
        "solve --gen complete:5",
        "color --gen maximal_planar:9:3",
        "certify --gen complete:5",
        "encode --gen petersen --k 3",
        "gb --gen cycle:5 --k 3 --field rational",
        "oracle --input \"" + std::string(CHROMIDEAL_DATA_DIR) + "/planar10.json\"",
    };
    for (const auto& cmd : commands) {
        std::set<std::string> outputs;
        for (int rep = 0; rep < 3; ++rep) {
            const auto out = dir.file("out" + std::to_string(rep));
            ASSERT_EQ(run_binary(cmd, out, dir.file("err")), 0) << cmd;
            outputs.insert(io::read_file(out));
        }
        EXPECT_EQ(outputs.size(), 1u) << cmd;
    }
}

TEST(Cli, BinaryExitCodes) {
    TempDir dir;
    const auto out = dir.file("out"), err = dir.file("err");
    EXPECT_EQ(run_binary("solve --gen complete:5", out, err), 0);
    EXPECT_EQ(json::parse(io::read_file(out))["colorable"], false);
    EXPECT_EQ(run_binary("solve --gen complete:3 --field gf:7 --k 4", out, err), 1);
    EXPECT_FALSE(io::read_file(err).empty());
    EXPECT_EQ(run_binary("solve --gen petersen --k 3 --max-pairs 10", out, err), 2);
}

/*
   Copyright 2026 The propact Authors

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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "propact/cli.hpp"

using propact::json_io::Json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "propact");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = propact::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string write_temp(const std::string& name, const Json& j)
{
    auto path = std::filesystem::temp_directory_path() / ("propact_test_" + name + ".json");
    std::ofstream(path) << j.dump(2);
    return path.string();
}

std::string demo(const std::string& name) { return std::string(PROPACT_DEMO_DIR) + "/problems/" + name; }

} // namespace

TEST(Cli, MuExample)
{
    auto o = run({"--json", "mu", "--matrix", "[[2.718281828459045,0],[0,0.36787944117144233]]"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto j = o.json();
    EXPECT_NEAR(j["result"]["mu"][0].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["result"]["mu"][1].get<double>(), -1.0, 1e-9);
    EXPECT_EQ(j["command"], "mu");
    EXPECT_EQ(j["version"], "1");
    for (const char* key : {"inputs", "result", "method", "warnings", "seed"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, Sl2Example)
{
    auto o = run({"--json", "sl2", "--n", "5", "--m", "3", "--partition", "5"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto r = o.json()["result"];
    EXPECT_TRUE(r["proper"].get<bool>());
    EXPECT_TRUE(r["irreducible_closed_form"].get<bool>());
    EXPECT_FALSE(r["printed_inequality"].get<bool>());
    EXPECT_TRUE(r["witness"].is_null());

    auto bad = run({"sl2", "--n", "6", "--m", "3", "--partition", "5"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("--n"), std::string::npos);
}

TEST(Cli, VerdictPolarityDoesNotChangeExitCode)
{
    auto no = run({"--json", "proper", "--family", "A", "--rank", "1", "--a-L", "[[\"1\",\"-1\"]]", "--a-H",
                   "[[\"1\",\"-1\"]]"});
    ASSERT_EQ(no.code, 0) << no.err;
    EXPECT_FALSE(no.json()["result"]["proper"].get<bool>());
    EXPECT_TRUE(no.json()["result"]["witness_verified"].get<bool>());
    auto yes = run({"--json", "proper", "--family", "A", "--rank", "1", "--a-L", "[]", "--a-H", "[[\"1\",\"-1\"]]"});
    ASSERT_EQ(yes.code, 0) << yes.err;
    EXPECT_TRUE(yes.json()["result"]["proper"].get<bool>());
}

TEST(Cli, InputErrorsExitOneWithFieldPath)
{
    auto o = run({"mu", "--matrix", "[[1,0],[0"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("--matrix"), std::string::npos);

    Json problem = Json::parse(R"({"version": "1", "ambient": {"family": "A", "rank": 2},
        "a_L": {"basis": [["1", "0", "-1"]], "extra": 1}, "a_H": {"basis": []}})");
    auto f = run({"--file", write_temp("unknown_field", problem), "proper"});
    EXPECT_EQ(f.code, 1);
    EXPECT_NE(f.err.find("$.a_L.extra: unknown field"), std::string::npos) << f.err;

    problem["a_L"].erase("extra");
    problem["a_L"]["basis"][0][1] = "x";
    auto g = run({"--file", write_temp("bad_rational", problem), "proper"});
    EXPECT_EQ(g.code, 1);
    EXPECT_NE(g.err.find("$.a_L.basis[0][1]"), std::string::npos) << g.err;

    problem.erase("version");
    auto h = run({"--file", write_temp("no_version", problem), "proper"});
    EXPECT_EQ(h.code, 1);
    EXPECT_NE(h.err.find("$.version"), std::string::npos);

    auto s = run({"mu", "--matrix", "[[1,2],[2,4]]"});
    EXPECT_EQ(s.code, 1);
    EXPECT_NE(s.err.find("SingularMatrix"), std::string::npos);

    EXPECT_EQ(run({"no-such-command"}).code, 1);
    EXPECT_EQ(run({"pv", "--family", "Q", "--rank", "2"}).code, 1);
}

TEST(Cli, ResourceErrorsExitTwo)
{
    auto o = run({"--cap", "3", "proper", "--family", "A", "--rank", "2", "--a-L", "[[1,0,-1]]", "--a-H", "[[1,-1,0]]"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("CapExceeded"), std::string::npos);
}

TEST(Cli, ProblemFilesRoundTrip)
{
    for (const auto& [file, command] : std::vector<std::pair<std::string, std::string>>{
             {"proper_sl3.json", "proper"}, {"pv_sl3.json", "pv"}, {"pv_b2_mixed.json", "pv"}, {"mu_diag.json", "mu"}}) {
        auto first = run({"--json", "--file", demo(file), command});
        ASSERT_EQ(first.code, 0) << file << ": " << first.err;
        Json again = first.json()["inputs"];
        again["version"] = "1";
        auto second = run({"--json", "--file", write_temp("roundtrip", again), command});
        ASSERT_EQ(second.code, 0) << second.err;
        EXPECT_EQ(first.json()["result"], second.json()["result"]) << file;
        EXPECT_EQ(first.json()["inputs"], second.json()["inputs"]) << file;
    }
}

TEST(Cli, PvReportsBothConventions)
{
    auto o = run({"--json", "pv", "--family", "A", "--rank", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto r = o.json()["result"];
    EXPECT_EQ(r["value"], "2");
    EXPECT_EQ(r["temperedness"]["derived_chh"], "boundary");
    EXPECT_EQ(r["temperedness"]["printed"], "boundary");
    auto sum = run({"--json", "tempered", "--family", "A", "--rank", "1", "--copies", "2"}).json()["result"];
    EXPECT_EQ(sum["value"], "1");
    EXPECT_EQ(sum["temperedness"]["derived_chh"], "tempered");
    auto adj = run({"--json", "pv", "--family", "B", "--rank", "2", "--weights", "adjoint"}).json()["result"];
    EXPECT_EQ(adj["value"], "1");
}

TEST(Cli, JsonIsStableAcrossThreadCounts)
{
    const std::vector<std::vector<std::string>> commands{
        {"--file", demo("pv_b2_mixed.json"), "pv"},
        {"sl2-audit", "--n-max", "6"},
        {"vol", "sim", "--exponents", "1,-1", "--half-widths", "1,1", "--samples", "20000"},
        {"vol", "fit-q", "--n", "2", "--half-widths", "1,1", "--samples", "20000"},
    };
    for (auto cmd : commands) {
        auto one = cmd, four = cmd;
        one.insert(one.begin(), {"--json", "--seed", "3", "--threads", "1"});
        four.insert(four.begin(), {"--json", "--seed", "3", "--threads", "4"});
        auto a = run(one), b = run(four);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out) << cmd.front();
        EXPECT_EQ(a.out, run(one).out);
    }
}

TEST(Cli, VolumeCsvAndSeedSensitivity)
{
    auto csv = run({"--csv", "vol", "sim", "--exponents", "1,-1", "--half-widths", "1,1", "--samples", "10000",
                    "--t-grid", "0,1,2"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "t,estimate,stderr,exact");
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);

    auto s0 = run({"--json", "--seed", "0", "vol", "sim", "--exponents", "1,-1", "--samples", "10000"});
    auto s1 = run({"--json", "--seed", "1", "vol", "sim", "--exponents", "1,-1", "--samples", "10000"});
    ASSERT_EQ(s0.code, 0) << s0.err;
    EXPECT_NE(s0.out, s1.out);
    EXPECT_EQ(s0.json()["seed"], 0);
}

TEST(Cli, CatalogCommands)
{
    auto sf = run({"--json", "catalog", "spaceform", "--p", "1", "--q", "4"});
    ASSERT_EQ(sf.code, 0) << sf.err;
    auto r = sf.json()["result"];
    EXPECT_TRUE(r["cm_infinite"].get<bool>());
    EXPECT_TRUE(r["surface_group_admissible"].get<bool>());
    EXPECT_TRUE(r["compact_quotient_necessary"].get<bool>());

    auto tt = run({"--json", "catalog", "tangential-table"});
    ASSERT_EQ(tt.code, 0) << tt.err;
    int mismatches = 0;
    const Json table = tt.json();
    for (const auto& row : table["result"]["rows"]) {
        if (row["match"].get<bool>()) continue;
        ++mismatches;
        EXPECT_EQ(row["p"], 2);
        EXPECT_EQ(row["computed"], "4N");
        EXPECT_EQ(row["printed"], "2N");
    }
    EXPECT_EQ(mismatches, 1);

    auto cm = run({"--json", "calabi-markus", "--G", "SO(4,1)", "--H", "SO(3,1)"});
    ASSERT_EQ(cm.code, 0) << cm.err;
    EXPECT_FALSE(cm.json()["result"]["infinite_discontinuous_group"].get<bool>());
    auto cm2 = run({"--json", "calabi-markus", "--G", "SL(3)", "--H", "SL(2)"});
    EXPECT_TRUE(cm2.json()["result"]["infinite_discontinuous_group"].get<bool>());

    auto coc = run({"--json", "cocompact", "--G", "SO(4,2)", "--H", "SO(4,1)", "--L", "U(2,1)"});
    ASSERT_EQ(coc.code, 0) << coc.err;
    EXPECT_TRUE(coc.json()["result"]["cocompact_standard"].get<bool>());
}

TEST(Cli, BinarySmoke)
{
    std::string cmd = std::string("\"") + PROPACT_CLI_PATH + "\" --json sl2 --n 5 --m 3 --partition 5";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    ASSERT_TRUE(pipe);
    std::string out;
    char buf[512];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
    int status = pclose(pipe.release());
    EXPECT_EQ(status, 0);
    EXPECT_TRUE(Json::parse(out)["result"]["proper"].get<bool>());
}

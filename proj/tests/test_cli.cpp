// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphweaver/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphweaver/schedule_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("graphweaver_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CountCubic3Table) {
    auto r = run({"count", "--lattice", "cubic:3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["edges"], 54);
    EXPECT_EQ(doc["cascade"], 55);
    EXPECT_EQ(doc["box"], 70);
    EXPECT_EQ(doc["direct"], 108);
    EXPECT_EQ(doc["planned_schedule_ops"], 61);

    auto table = run({"count", "--lattice", "cubic:3"});
    ASSERT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("cascade"), std::string::npos);
    EXPECT_NE(table.out.find("108"), std::string::npos);
}

TEST_F(CliTest, CountCubic2AndErrors) {
    auto doc = nlohmann::json::parse(run({"count", "--lattice", "cubic:2", "--json"}).out);
    EXPECT_EQ(doc["cascade"], 13);
    EXPECT_EQ(doc["box"], 13);
    EXPECT_EQ(doc["direct"], 24);
    EXPECT_EQ(run({"count", "--lattice", "cubic:1"}).code, 2);
    EXPECT_EQ(run({"count"}).code, 2);
    EXPECT_EQ(run({"count", "--lattice", "bogus:3"}).code, 2);
}

TEST_F(CliTest, PlanWritesValidSchedule) {
    auto graph = write("path.txt", "a b\nb c\n");
    auto r = run({"plan", graph});
    ASSERT_EQ(r.code, 0) << r.err;
    auto s = gw::schedule_from_json(r.out);
    EXPECT_EQ(s.steps.size(), 4u);

    auto out = path("s.json");
    ASSERT_EQ(run({"plan", "--lattice", "square:3x3", "--block", "0.0,0.1,0.2", "-o", out}).code, 0);
    auto counted = nlohmann::json::parse(run({"count", "--schedule", out, "--json"}).out);
    EXPECT_GT(counted["schedule_ops"].get<int>(), 0);
}

TEST_F(CliTest, PlanInputErrors) {
    EXPECT_EQ(run({"plan", write("loop.txt", "a a\n")}).code, 2);
    EXPECT_EQ(run({"plan", path("missing.txt")}).code, 2);
    EXPECT_EQ(run({"plan"}).code, 2);
    EXPECT_EQ(run({"plan", "--lattice", "square:2x2", "--block", "0.0,1.1"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, SimulateIsDeterministicPerSeed) {
    auto sched = path("s.json");
    ASSERT_EQ(run({"plan", "--lattice", "square:2x3", "-o", sched}).code, 0);
    auto a = run({"simulate", sched, "--seed", "7"});
    auto b = run({"simulate", sched, "--seed", "7"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["backend"], "vector");
    EXPECT_GE(doc["fidelity"].get<double>(), 1 - 1e-9);
    EXPECT_FALSE(doc.contains("wall_time_s"));
    EXPECT_TRUE(nlohmann::json::parse(run({"simulate", sched, "--timing"}).out).contains("wall_time_s"));
}

TEST_F(CliTest, SimulateForcedOutcomes) {
    auto sched = path("s.json");
    ASSERT_EQ(run({"plan", write("p.txt", "a b\nb c\n"), "-o", sched}).code, 0);
    auto r = run({"simulate", sched, "--force-outcomes", "3,2,1", "--force-detach", "1", "--check-preconditions"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["outcomes"][0]["n"], 3);
    EXPECT_EQ(doc["outcomes"][2]["n"], 1);
    EXPECT_EQ(doc["outcomes"][3]["bit"], 1);
    EXPECT_GE(doc["fidelity"].get<double>(), 1 - 1e-9);
    EXPECT_EQ(run({"simulate", sched, "--force-detach", "2"}).code, 2);
    EXPECT_EQ(run({"simulate", sched, "--force-outcomes", "x"}).code, 2);
    EXPECT_EQ(run({"simulate", sched, "--eta", "3"}).code, 2);
}

TEST_F(CliTest, SimulateCubic3Backends) {
    auto sched = path("c3.json");
    ASSERT_EQ(run({"plan", "--lattice", "cubic:3", "-o", sched}).code, 0);
    auto vec = run({"simulate", sched, "--backend", "vector"});
    EXPECT_EQ(vec.code, 3);
    EXPECT_NE(vec.err.find("symbolic"), std::string::npos);
    auto autob = run({"simulate", sched});
    ASSERT_EQ(autob.code, 0);
    auto doc = nlohmann::json::parse(autob.out);
    EXPECT_EQ(doc["backend"], "symbolic");
    EXPECT_EQ(doc["edges_match"], true);
}

TEST_F(CliTest, SimulateRejectsTamperedSchedule) {
    auto sched = write("bad.json", R"({"v":1,"graph_hash":"0000000000000000","steps":[{"op":"attach","p":"a"},)"
                                   R"({"op":"link","p":"a","r":"b"},{"op":"detach","r":"b"}]})");
    EXPECT_EQ(run({"simulate", sched}).code, 2);
    EXPECT_EQ(run({"simulate", write("junk.json", "{")}).code, 2);
}

TEST_F(CliTest, QndSweepRows) {
    auto r = run({"qnd-sweep", "--alpha-sin-theta", "1:5:5", "--gamma-theta", "1,10"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "alpha,theta,gamma,eta,formula,sum_linearized,sum_cosine");
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
        std::vector<double> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');)
            cells.push_back(std::stod(c));
        ASSERT_EQ(cells.size(), 7u);
        EXPECT_NEAR(cells[5] / cells[4], 1.0, 1e-9);
    }
    EXPECT_EQ(rows, 10);
    EXPECT_EQ(run({"qnd-sweep", "--theta", "1:2"}).code, 2);
    EXPECT_EQ(run({"qnd-sweep", "--theta", "3"}).code, 2);
}

TEST_F(CliTest, LinearAndDot) {
    auto r = run({"linear", "--n", "3", "--trials", "2000", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["expected_attempts"], 8.0);
    EXPECT_EQ(run({"linear", "--n", "1"}).code, 2);

    auto dot = run({"dot", "--lattice", "square:2x2"});
    ASSERT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("graph {", 0), 0u);
    auto dotfile = write("g.dot", dot.out);
    auto again = run({"dot", dotfile});
    EXPECT_EQ(again.out, dot.out);
}

TEST_F(CliTest, HelpAndVersion) {
    EXPECT_EQ(run({"--help"}).code, 0);
    auto v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("graphweaver"), std::string::npos);
}

TEST_F(CliTest, BinaryExitCodes) {
    const std::string exe = GRAPHWEAVER_CLI_PATH;
    auto sched = path("c3.json");
    auto sh = [&](const std::string &cmd) {
        int status = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(sh(exe + " plan --lattice cubic:3 -o " + sched), 0);
    EXPECT_EQ(sh(exe + " simulate --backend vector " + sched), 3);
    EXPECT_EQ(sh(exe + " plan --lattice cubic:zero"), 2);
    EXPECT_EQ(sh("GRAPHWEAVER_CAPACITY=abc " + exe + " simulate " + sched), 2);
}

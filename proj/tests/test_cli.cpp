// Copyright 2026 The duplexchain Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DUPLEX_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("duplexchain_cli_" + name);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Cli, fidelity_table_shape) {
    const RunResult r = run_cli("fidelity --n 10 --theta1 0.6pi --theta2 0.6pi --t-max 50 --dt 0.1");
    ASSERT_EQ(r.exit_code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 502u);
    EXPECT_EQ(rows[0], "t,f_bob,f_alice");
    EXPECT_EQ(rows[1], "0,1,1");
    EXPECT_EQ(rows.back().substr(0, 3), "50,");
}

TEST(Cli, both_down_is_perfect_everywhere) {
    const RunResult r = run_cli("fidelity --n 7 --h-field 0.4 --t-max 20 --dt 0.5");
    ASSERT_EQ(r.exit_code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 42u);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const std::string tail = rows[k].substr(rows[k].find(','));
        EXPECT_EQ(tail, ",1,1") << rows[k];
    }
}

TEST(Cli, deterministic_output) {
    const std::string args = "sweep-phase --n 6 --theta1 pi/2 --theta2 pi/2 --workers 3";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out).size(), 162u);
}

TEST(Cli, config_file_and_overrides) {
    const auto dir = scratch_dir("config");
    const auto cfg = dir / "cfg.json";
    const auto csv = dir / "out.csv";
    std::ofstream(cfg) << R"({"experiment": "theta_grid", "chain": {"n_sites": 5},
        "grids": {"theta1": {"start": 0, "stop": 3.141592653589793, "count": 3},
                  "theta2": {"start": 0, "stop": 3.141592653589793, "count": 2}}})";
    const RunResult r = run_cli("sweep-theta --config " + cfg.string() + " --out " + csv.string());
    ASSERT_EQ(r.exit_code, 0);
    const auto rows = lines(slurp(csv));
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "theta1,theta2,f_max,tau");
    EXPECT_EQ(rows[1], "0,0,1,10");
}

TEST(Cli, reproduce_writes_csv_and_svg) {
    const auto dir = scratch_dir("reproduce");
    const auto csv = dir / "panel.csv";
    const RunResult r = run_cli("reproduce fig3a --n 5 --out " + csv.string());
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(lines(slurp(csv)).size(), 162u);
    EXPECT_NE(slurp(dir / "panel.svg").find("</svg>"), std::string::npos);
}

TEST(Cli, exit_codes) {
    EXPECT_EQ(run_cli("oracle-check --n 4 --cases 3").exit_code, 0);
    EXPECT_EQ(run_cli("oracle-check --n 4 --cases 2 --h-field 1 --field-sign eq1").exit_code, 1);
    EXPECT_EQ(run_cli("oracle-check --n 15 --cases 1").exit_code, 2);
    EXPECT_EQ(run_cli("fidelity --theta1 4").exit_code, 2);
    EXPECT_EQ(run_cli("fidelity --n 1").exit_code, 2);
    EXPECT_EQ(run_cli("fidelity --theta1 nonsense").exit_code, 2);
    EXPECT_EQ(run_cli("no-such-command").exit_code, 2);
    EXPECT_EQ(run_cli("reproduce fig9").exit_code, 2);
    EXPECT_EQ(run_cli("sweep-theta --config /nonexistent.json").exit_code, 2);
}

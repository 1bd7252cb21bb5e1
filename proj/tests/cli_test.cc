// Copyright 2026 The modlat Authors
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

#include "modlat/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "modlat/enumerate.h"
#include "modlat/serialize.h"
#include "test_util.h"

using namespace modlat;
using modlat::testing::data_path;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("modlat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    std::string construct(const std::string &mat) const {
        std::string target = path(mat + ".md");
        EXPECT_EQ(run({"construct", "--b", data_path(mat), "--out", target}).code, cli::kExitOk);
        return target;
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, construct_then_verify) {
    for (const char *mat : {"semion.mat", "toric.mat", "z3.mat"}) {
        Result r = run({"verify", "--data", construct(mat)});
        EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
        EXPECT_EQ(r.out.find("fail:"), std::string::npos);
    }
    Result printed = run({"construct", "--b", data_path("semion.mat")});
    EXPECT_EQ(printed.out, serialize(from_lattice(parse_gram_matrix("2\n"))));
}

TEST_F(CliTest, verify_rejects_corrupted_semion) {
    Result r = run({"verify", "--data", data_path("corrupted_semion.md")});
    EXPECT_EQ(r.code, cli::kExitVerificationFailed);
    EXPECT_NE(r.out.find(std::string("fail: ") + relation::kModular), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(std::string("fail: ") + relation::kGauss), std::string::npos) << r.out;
    Report report = parse_report(r.out);
    EXPECT_FALSE(report.all_passed());
}

TEST_F(CliTest, verify_exit_codes_on_corpus) {
    auto corpus = generate_gram_matrices({2, 2, std::nullopt});
    for (std::size_t i = 0; i < corpus.size(); i++) {
        std::string doc = write("b" + std::to_string(i) + ".md", serialize(from_lattice(corpus[i])));
        ASSERT_EQ(run({"verify", "--data", doc}).code, cli::kExitOk);
    }
}

TEST_F(CliTest, link_on_semion) {
    std::string semion = construct("semion.mat");
    Result r = run({"link", "--data", semion, "--linking", data_path("hopf.mat"), "--colors", "1,1"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "-1\n");
    std::string unknot = write("unknot.mat", "1\n");
    EXPECT_EQ(run({"link", "--data", semion, "--linking", unknot, "--colors", "1"}).out, "e(1/4)\n");
    EXPECT_EQ(run({"link", "--data", semion, "--linking", unknot, "--colors", "0"}).out, "1\n");
    EXPECT_EQ(run({"link", "--data", semion, "--linking", unknot, "--colors", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"link", "--data", semion, "--linking", unknot, "--colors", "x"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"link", "--data", semion, "--linking", unknot, "--colors", "1,1"}).code, cli::kExitUsage);
    // Generic data has no lattice to evaluate links on.
    EXPECT_EQ(run({"link", "--data", data_path("semion.md"), "--linking", unknot, "--colors", "1"}).code,
              cli::kExitUsage);
}

TEST_F(CliTest, fusion) {
    std::string toric = construct("toric.mat");
    Result r = run({"fusion", "--data", toric, "--i", "2", "--j", "1"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "fusion 2 x 1\n3: N = 1, P = 1\n");
    Result fib = run({"fusion", "--data", data_path("fibonacci.md"), "--i", "1", "--j", "1"});
    EXPECT_EQ(fib.code, cli::kExitVerificationFailed);
    EXPECT_EQ(run({"fusion", "--data", toric, "--i", "9", "--j", "1"}).code, cli::kExitUsage);
}

TEST_F(CliTest, enumerate) {
    Result r = run({"enumerate", "--max-dim", "1", "--max-entry", "2"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out,
              "rank  classes  witness  twists\n"
              "2     2        [[2]]    {e(0/1), e(1/4)}\n"
              "2     2        [[-2]]   {e(0/1), e(3/4)}\n");
    Result capped = run({"enumerate", "--max-dim", "2", "--max-entry", "4", "--max-rank", "12"});
    EXPECT_EQ(capped.code, cli::kExitOk) << capped.err;
    EXPECT_EQ(capped.out, run({"enumerate", "--max-dim", "2", "--max-entry", "4", "--max-rank", "12"}).out);
    // Without a cap the corpus exceeds the default canonical-form bound.
    EXPECT_EQ(run({"enumerate", "--max-dim", "1", "--max-entry", "10"}).code, cli::kExitUsage);
}

TEST_F(CliTest, show) {
    std::string semion = construct("semion.mat");
    Result r = run({"show", "--data", semion, "--approx"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out,
              "rank: 2\n"
              "labels: 0, 1\n"
              "quantum dimensions: 1, 1\n"
              "D^2: 2\n"
              "p+: 1 + e(1/4)\n"
              "p-: 1 - e(1/4)\n"
              "twists: e(0/1), e(1/4)\n"
              "s_tilde:\n"
              "  1, 1\n"
              "  1, -1\n"
              "provenance:\n"
              "  2\n"
              "approx p+: 1.000000000+1.000000000i\n"
              "approx p-: 1.000000000-1.000000000i\n"
              "approx twists: 1.000000000+0.000000000i, 0.000000000+1.000000000i\n"
              "approx s_tilde:\n"
              "  1.000000000+0.000000000i, 1.000000000+0.000000000i\n"
              "  1.000000000+0.000000000i, -1.000000000+0.000000000i\n");
    Result named = run({"show", "--data", data_path("semion.md")});
    EXPECT_NE(named.out.find("labels: 1, s\n"), std::string::npos);
}

TEST_F(CliTest, usage_errors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--data", path("missing.md")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct", "--b", write("odd.mat", "1\n")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct", "--b", write("bad.mat", "2 x\n")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--data", write("bad.md", "kind: modular_data\nrank: 1\ntwists: e(0/1\n")}).code,
              cli::kExitUsage);
    EXPECT_EQ(run({"enumerate", "--max-dim", "0", "--max-entry", "2"}).code, cli::kExitUsage);
    Result help = run({"--help"});
    EXPECT_EQ(help.code, cli::kExitOk);
    EXPECT_NE(help.out.find("enumerate"), std::string::npos);
}

TEST_F(CliTest, output_is_deterministic) {
    std::string toric = construct("toric.mat");
    std::vector<std::vector<std::string>> commands{
        {"construct", "--b", data_path("z3.mat")},
        {"verify", "--data", toric},
        {"verify", "--data", data_path("corrupted_semion.md")},
        {"fusion", "--data", toric, "--i", "3", "--j", "3"},
        {"link", "--data", toric, "--linking", data_path("hopf.mat"), "--colors", "1,2"},
        {"enumerate", "--max-dim", "2", "--max-entry", "2"},
        {"show", "--data", toric, "--approx"},
    };
    for (const auto &c : commands) {
        Result a = run(c);
        Result b = run(c);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(a.out.empty());
    }
}

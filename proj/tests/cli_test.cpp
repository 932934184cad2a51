// Copyright 2026 The cssp-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CSSP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cssp_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ASSERT_EQ(run("gen-corpus -o " + dir_.string() + " --count 2").code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, CorpusFiles) {
  for (const char* f : {"k2.col", "k3.col", "k4.col", "p3.col", "c5.col",
                        "petersen.col", "random4_1.col", "random4_2.col"}) {
    EXPECT_TRUE(fs::exists(path(f))) << f;
  }
}

TEST_F(CliTest, ReduceTriangle) {
  const auto r = run("reduce -i " + path("k3.col") + " -o " + path("k3.inst"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t 1/864\n"), std::string::npos);
  std::ifstream in(path("k3.inst"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "cssp-instance v1");
  std::string dims;
  std::getline(in, dims);
  EXPECT_EQ(dims, "n 3 m 3 k 3");
}

TEST_F(CliTest, ReduceErrors) {
  write("loop.col", "p edge 2 1\ne 1 1\n");
  EXPECT_EQ(run("reduce -i " + path("loop.col")).code, 2);
  write("empty.col", "p edge 3 0\n");
  EXPECT_EQ(run("reduce -i " + path("empty.col")).code, 2);
  EXPECT_EQ(run("reduce -i " + path("missing.col")).code, 2);
  write("junk.col", "\x01\x02 garbage\n");
  EXPECT_EQ(run("reduce -i " + path("junk.col")).code, 2);
}

TEST_F(CliTest, Decide) {
  ASSERT_EQ(run("reduce -i " + path("k3.col") + " -o " + path("k3.inst")).code, 0);
  ASSERT_EQ(run("reduce -i " + path("k4.col") + " -o " + path("k4.inst")).code, 0);
  ASSERT_EQ(run("reduce -i " + path("petersen.col") + " -o " + path("pet.inst")).code, 0);

  auto yes = run("decide -i " + path("k3.inst") + " --mode exact-full");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("decision YES\n", 0), 0u);
  EXPECT_NE(yes.out.find("subsets 220\n"), std::string::npos);

  auto no = run("decide -i " + path("k4.inst") + " --mode exact-structured");
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out.rfind("decision NO\n", 0), 0u);

  EXPECT_EQ(run("decide -i " + path("pet.inst") + " --mode exact-full").code, 3);
  EXPECT_EQ(run("decide -i " + path("k3.inst") + " --mode bogus").code, 2);
  EXPECT_EQ(run("decide -i " + path("k3.inst") + " --mode greedy").code, 0);
}

TEST_F(CliTest, VerifyColorLemmas) {
  auto v = run("verify -i " + path("k3.col"));
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("VERDICT PASS"), std::string::npos);

  auto c = run("color -i " + path("k4.col"));
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("no three-coloring"), std::string::npos);

  auto l = run("check-lemmas -i " + path("k3.col"));
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out.find("FAIL"), std::string::npos);
  EXPECT_NE(l.out.find("VERDICT PASS"), std::string::npos);
}

TEST_F(CliTest, Deterministic) {
  const auto a = run("check-lemmas -i " + path("p3.col"));
  const auto b = run("check-lemmas -i " + path("p3.col"));
  EXPECT_EQ(a.out, b.out);
  const auto r1 = run("reduce -i " + path("c5.col"));
  const auto r2 = run("reduce -i " + path("c5.col"));
  EXPECT_EQ(r1.out, r2.out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("decide").code, 2);
  EXPECT_EQ(run("verify -i " + path("k3.col") + " --mode sideways").code, 2);
}

}  // namespace

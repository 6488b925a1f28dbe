// Copyright 2026 The rnstruct Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "cli.h"
#include "rnstruct/document.h"

namespace rnstruct {
namespace {

using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  for (auto& a : args) {
    if (a.size() > 5 && a.substr(a.size() - 5) == ".json" && a.find('/') == std::string::npos) {
      a = std::string(RNSTRUCT_TEST_DATA) + "/" + a;
    }
  }
  int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / ("rnstruct_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

TEST(CliTest, VerifyRn) {
  Result r = Cli({"verify-rn", "a41_rn.json"});
  EXPECT_EQ(r.code, 0);
  for (const char* line : {"cybe: OK", "nijenhuis: OK", "con1: OK", "concomitant: OK", "status: OK"}) {
    EXPECT_THAT(r.out, HasSubstr(line));
  }
}

TEST(CliTest, VerifyRNamesFirstFailingIndex) {
  Result r = Cli({"verify-r", "a41_r_bad.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.out, HasSubstr("first_failing_i: 1"));
  EXPECT_THAT(r.out, HasSubstr("status: FAIL"));
  EXPECT_EQ(Cli({"verify-r", "a41_rn.json"}).code, 0);
}

TEST(CliTest, VerifyAlgebraAndN) {
  EXPECT_EQ(Cli({"verify-algebra", "a41_rn.json"}).code, 0);
  EXPECT_EQ(Cli({"verify-n", "a41_rn.json"}).code, 0);
  std::string bad = TempFile("bad_alg.json",
                             R"({"algebra": {"dim": 3, "brackets": [[1, 2, 2, "1"], [2, 3, 1, "1"]]}})");
  Result r = Cli({"verify-algebra", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.out, HasSubstr("jacobi: FAIL"));
  std::string swap = TempFile("swap_n.json",
                              R"({"algebra": {"dim": 4, "brackets": [[2, 4, 1, "1"], [3, 4, 2, "1"]]},
                                  "n": {"matrix": [["0","0","0","1"],["0","1","0","0"],["0","0","1","0"],["1","0","0","0"]]}})");
  EXPECT_EQ(Cli({"verify-n", swap}).code, 1);
}

TEST(CliTest, DualHierarchyCompatConstruct) {
  Result d = Cli({"dual", "a41_rn.json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_THAT(d.out, HasSubstr("[X^1, X^2] = X^3"));
  EXPECT_THAT(d.out, HasSubstr("[X^1, X^3] = X^4"));
  EXPECT_EQ(Cli({"dual", "a41_r_bad.json"}).code, 1);

  Result h = Cli({"hierarchy", "a41_rn.json", "--k", "3"});
  EXPECT_EQ(h.code, 0);
  EXPECT_THAT(h.out, HasSubstr("r_3"));

  Result c = Cli({"compat", "a41_rn.json", "a41_r12_13.json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_THAT(c.out, HasSubstr("kind: r-r"));
  EXPECT_EQ(Cli({"compat", "a41_rn.json", "a41_r_bad.json"}).code, 1);

  Result n = Cli({"construct-n", "a41_rn.json", "a41_r12_13.json"});
  EXPECT_EQ(n.code, 0);
  EXPECT_THAT(n.out, HasSubstr("n(X4) = X2 + X3"));
  EXPECT_EQ(Cli({"construct-n", "a41_r12_13.json", "a41_rn.json"}).code, 1);
}

TEST(CliTest, Equiv) {
  Result w = Cli({"equiv", "a41_rn.json", "a41_rn.json", "--witness", "a41_identity_witness.json"});
  EXPECT_EQ(w.code, 0);
  EXPECT_THAT(w.out, HasSubstr("verified: true"));

  Result s = Cli({"equiv", "a41_r12_13.json", "a41_r12_4x13.json", "--search"});
  EXPECT_EQ(s.code, 0);
  EXPECT_THAT(s.out, HasSubstr("verified: true"));

  Result f = Cli({"equiv", "a41_r13.json", "a41_r13_neg.json", "--search", "--budget", "300"});
  EXPECT_EQ(f.code, 1);
  EXPECT_THAT(f.out, HasSubstr("no witness found (budget 300)"));

  std::string wrong = TempFile("wrong_w.json",
                               R"({"automorphism": {"family": "A41", "assignment":
                                  {"a11": "1", "a16": "1", "a7": "1", "a12": "2", "a8": "0", "a3": "1", "a4": "0"}}})");
  EXPECT_EQ(Cli({"equiv", "a41_rn.json", "a41_rn.json", "--witness", wrong}).code, 1);
  EXPECT_EQ(Cli({"equiv", "a41_rn.json", "a41_rn.json"}).code, 2);
}

TEST(CliTest, CatalogListAndShow) {
  Result l = Cli({"catalog", "list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_THAT(l.out, HasSubstr("VII0R"));
  Result s = Cli({"catalog", "show", "A41", "--class", "rn"});
  EXPECT_EQ(s.code, 0);
  Result bad = Cli({"catalog", "show", "A99"});
  EXPECT_EQ(bad.code, 2);
}

// A shown sample is a document the other subcommands accept.
TEST(CliTest, CatalogShowSampleRoundTrips) {
  for (const char* cls : {"rn", "n1", "r1"}) {
    Result s = Cli({"catalog", "show", "A41", "--class", cls, "--sample", "1", "--json"});
    ASSERT_EQ(s.code, 0) << s.err;
    size_t start = s.out.find('{');
    ASSERT_NE(start, std::string::npos);
    Document d = ParseDocument(s.out.substr(start));
    EXPECT_TRUE(d.algebra.has_value());
    EXPECT_TRUE(d.r.has_value());
    std::string file = TempFile(std::string("show_") + cls + ".json", PrintDocument(d));
    EXPECT_EQ(Cli({std::string(cls) == "r1" ? "verify-r" : "verify-rn", file}).code, 0) << cls;
  }
}

TEST(CliTest, CatalogVerify) {
  Result r = Cli({"catalog", "verify", "--seed", "1", "--samples", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("18 entries, 0 failures"));
}

TEST(CliTest, Invariants) {
  Result r = Cli({"invariants", "a41_integrable.json", "--kmax", "3"});
  // The embedded triangular matrices are not a representation, so the
  // pipeline reports a failed check while still printing the invariants.
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.out, HasSubstr("2*x2*x3 - x3 - x4"));
  EXPECT_THAT(r.out, HasSubstr("superintegrable(extra=1)"));
}

TEST(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"bogus"}).code, 2);
  EXPECT_EQ(Cli({"verify-r"}).code, 2);
  EXPECT_EQ(Cli({"verify-r", "/nonexistent/x.json"}).code, 2);
  EXPECT_EQ(Cli({"hierarchy", "a41_rn.json", "--k", "zero"}).code, 2);
  std::string broken = TempFile("broken.json", "{\"r\": {\"dim\": 4, \"wedge\": [[1, 9, \"1\"]]}}");
  Result r = Cli({"verify-r", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("/r/wedge/0"));
  std::string syntax = TempFile("syntax.json", "{\"r\": ");
  r = Cli({"verify-r", syntax});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("byte"));
  EXPECT_EQ(Cli({"verify-r", "a41_integrable.json", "--json", "--nope"}).code, 2);
}

TEST(CliTest, OutputIsDeterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"catalog", "verify", "--seed", "3", "--samples", "1"},
        std::vector<std::string>{"equiv", "a41_r12_13.json", "a41_r12_4x13.json", "--search",
                                 "--seed", "5"},
        std::vector<std::string>{"verify-rn", "a41_rn.json", "--json"}}) {
    Result a = Cli(args), b = Cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(CliTest, JsonModeIsADocument) {
  Result r = Cli({"verify-rn", "a41_rn.json", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("\"status\": \"OK\""));
}

}  // namespace
}  // namespace rnstruct

// Copyright 2026 The gapseq Authors
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

#include <cstdlib>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cli_harness.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "output.hpp"

namespace gapseq {
namespace {

using ::testing::HasSubstr;
using testing::run;

// Sets GAPSEQ_MAX_GENUS for the lifetime of the guard.
class EnvCap {
 public:
  explicit EnvCap(const char* value) { ::setenv(cli::kMaxGenusEnv, value, 1); }
  ~EnvCap() { ::unsetenv(cli::kMaxGenusEnv); }
};

TEST(CliEnumerate, GenusThreePlain) {
  const auto r = run({"enumerate", "--genus", "3", "--method", "oracle", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "g=3 gaps={1,2,3} nongaps<=2g={4,5,6}\n"
            "g=3 gaps={1,2,4} nongaps<=2g={3,5,6}\n"
            "g=3 gaps={1,2,5} nongaps<=2g={3,4,6}\n"
            "g=3 gaps={1,3,5} nongaps<=2g={2,4,6}\n"
            "count=4\n");
}

TEST(CliEnumerate, GenusZero) {
  const auto r = run({"enumerate", "--genus", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "g=0 gaps={} nongaps<=2g={}\ncount=1\n");
}

TEST(CliEnumerate, TreeAndOracleAgree) {
  const auto tree = run({"enumerate", "--genus", "5", "--method", "tree"});
  const auto oracle = run({"enumerate", "--genus", "5", "--method", "oracle"});
  EXPECT_EQ(tree.code, 0);
  EXPECT_EQ(tree.out, oracle.out);
  EXPECT_EQ(testing::lines(tree.out).back(), "count=12");
}

TEST(CliEnumerate, JsonRecordsAreCanonical) {
  const auto r = run({"enumerate", "--genus", "3", "--format", "json", "--include-ledger"});
  ASSERT_EQ(r.code, 0);
  const auto ls = testing::lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[2],
            R"({"ap_runs":[{"j":1,"lambda":0},{"j":2,"lambda":1}],"classification":"ordinary",)"
            R"("frobenius":5,"gaps":[1,2,5],"genus":3,"ledger":{"ell":[1,1,1,2,3,3,4],)"
            R"("i":[3,2,1,1,1,0,0]},"multiplicity":3,"non_gaps_window":[3,4,6]})");
  EXPECT_EQ(ls.back(), R"({"count":4})");
  // Without the flag no ledger key appears at all.
  const auto bare = run({"enumerate", "--genus", "3", "--format", "json"});
  EXPECT_THAT(bare.out, ::testing::Not(HasSubstr("ledger")));
  EXPECT_THAT(bare.out, ::testing::Not(HasSubstr("null")));
}

TEST(CliEnumerate, CsvAndJsonCarrySameValues) {
  const auto csv = run({"enumerate", "--genus", "5", "--format", "csv", "--include-ledger"});
  const auto json = run({"enumerate", "--genus", "5", "--format", "json", "--include-ledger"});
  const auto csv_lines = testing::lines(csv.out);
  const auto json_lines = testing::lines(json.out);
  ASSERT_EQ(csv_lines.size(), json_lines.size() + 1);  // header
  EXPECT_EQ(csv_lines.front(), cli::csv_header(true));
  auto list = [](const nlohmann::json& a) {
    std::string s;
    for (const auto& x : a) s += (s.empty() ? "" : ";") + std::to_string(x.get<int>());
    return s;
  };
  for (std::size_t k = 0; k + 1 < json_lines.size(); ++k) {
    const auto j = nlohmann::json::parse(json_lines[k]);
    std::string runs;
    for (const auto& run : j["ap_runs"]) {
      runs += (runs.empty() ? "" : ";") + std::to_string(run["j"].get<int>()) + ":" +
              std::to_string(run["lambda"].get<int>());
    }
    const std::string expected =
        std::to_string(j["genus"].get<int>()) + "," + list(j["gaps"]) + "," +
        list(j["non_gaps_window"]) + "," + std::to_string(j["multiplicity"].get<int>()) + "," +
        std::to_string(j["frobenius"].get<int>()) + "," +
        j["classification"].get<std::string>() + "," + runs + "," + list(j["ledger"]["ell"]) +
        "," + list(j["ledger"]["i"]);
    EXPECT_EQ(csv_lines[k + 1], expected);
  }
}

TEST(CliEnumerate, ByteIdenticalReruns) {
  for (const char* fmt : {"plain", "json", "csv"}) {
    const std::vector<std::string> args{"enumerate", "--genus", "7", "--format", fmt,
                                        "--workers", "3"};
    EXPECT_EQ(run(args).out, run(args).out) << fmt;
    EXPECT_EQ(run(args).out,
              run({"enumerate", "--genus", "7", "--format", fmt, "--workers", "1"}).out);
  }
}

TEST(CliCount, Values) {
  EXPECT_EQ(run({"count", "--genus", "3"}).out, "4\n");
  EXPECT_EQ(run({"count", "--genus", "1"}).out, "1\n");
  EXPECT_EQ(run({"count", "--genus", "8", "--method", "oracle"}).out,
            run({"count", "--genus", "8", "--method", "tree"}).out);
  EXPECT_EQ(run({"count", "--genus", "20", "--workers", "0"}).code, 0);
}

TEST(CliValidate, Valid) {
  const auto r = run({"validate", "--gaps", "1,3,5", "--genus", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid\n");
}

TEST(CliValidate, MissingFirstGap) {
  const auto r = run({"validate", "--gaps", "2,3,4", "--genus", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_THAT(r.out, HasSubstr("first-gap: 1 missing"));
}

TEST(CliValidate, ClosureWitness) {
  const auto r = run({"validate", "--gaps", "1,4,5", "--genus", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "invalid\nclosure: 2+2=4 is a gap\nclosure: 2+3=5 is a gap\n");
  const auto j = nlohmann::json::parse(
      run({"validate", "--gaps", "1,4,5", "--genus", "3", "--format", "json"}).out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["violations"][0]["constraint"], "closure");
  EXPECT_EQ(j["violations"][0]["witness"], nlohmann::json({2, 2, 4}));
}

TEST(CliValidate, GenusZeroAndConvenienceFlags) {
  EXPECT_EQ(run({"validate", "--genus", "0"}).code, 0);
  EXPECT_EQ(run({"validate", "--gaps", "", "--genus", "0"}).code, 0);
  EXPECT_EQ(run({"validate", "--hyperelliptic", "30"}).code, 0);
  EXPECT_EQ(run({"validate", "--exceptional", "30"}).code, 0);
  EXPECT_EQ(run({"validate", "--exceptional", "1"}).code, 64);
}

TEST(CliValidate, UsageErrors) {
  EXPECT_EQ(run({"validate", "--gaps", "1,x,5", "--genus", "3"}).code, 64);
  EXPECT_EQ(run({"validate", "--gaps", "1,,5", "--genus", "3"}).code, 64);
  EXPECT_EQ(run({"validate", "--gaps", "1,3,5"}).code, 64);
  EXPECT_EQ(run({"validate", "--genus", "3"}).code, 64);
  EXPECT_EQ(run({"validate", "--gaps", "1", "--genus", "1", "--hyperelliptic", "1"}).code, 64);
  EXPECT_EQ(run({"validate", "--gaps", "1", "--genus", "-1"}).code, 64);
  EXPECT_EQ(run({"validate", "--gaps", "1,3,5", "--genus", "3", "--format", "csv"}).code, 64);
}

TEST(CliAnalyze, Examples) {
  const auto h = run({"analyze", "--gaps", "1,3,5,7", "--genus", "4"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out,
            "g=4 gaps={1,3,5,7} nongaps<=2g={2,4,6,8} multiplicity=2 frobenius=7 "
            "class=hyperelliptic runs={1:3}\n");

  const auto one = nlohmann::json::parse(
      run({"analyze", "--gaps", "1", "--genus", "1", "--format", "json"}).out);
  EXPECT_EQ(one["classification"], "hyperelliptic");
  EXPECT_EQ(one["ap_runs"], nlohmann::json::parse(R"([{"j":1,"lambda":0}])"));

  const auto o = nlohmann::json::parse(
      run({"analyze", "--gaps", "1,2,5", "--genus", "3", "--format", "json"}).out);
  EXPECT_EQ(o["classification"], "ordinary");
  EXPECT_EQ(o["ap_runs"], nlohmann::json::parse(R"([{"j":1,"lambda":0},{"j":2,"lambda":1}])"));
}

TEST(CliAnalyze, GenusZeroAndInvalid) {
  const auto z = run({"analyze", "--genus", "0", "--format", "json"});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(nlohmann::json::parse(z.out)["classification"], "trivial");
  const auto bad = run({"analyze", "--gaps", "1,4,5", "--genus", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_THAT(bad.err, HasSubstr("closure: 2+2=4 is a gap"));
  EXPECT_TRUE(bad.out.empty());
}

TEST(CliLedger, OneTwoFive) {
  const auto j = nlohmann::json::parse(
      run({"ledger", "--gaps", "1,2,5", "--genus", "3", "--format", "json"}).out);
  EXPECT_EQ(j["ell"], nlohmann::json({1, 1, 1, 2, 3, 3, 4}));
  EXPECT_EQ(j["i"], nlohmann::json({3, 2, 1, 1, 1, 0, 0}));
  EXPECT_EQ(j["canonical_degree"], 4);
  EXPECT_TRUE(j["verification"]["valid"].get<bool>());

  const auto plain = run({"ledger", "--gaps", "1,2,5", "--genus", "3"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_THAT(plain.out, HasSubstr("verification: valid"));
}

TEST(CliLedger, GenusOneAndHyperelliptic) {
  const auto csv = run({"ledger", "--gaps", "1", "--genus", "1", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "n,ell,i,gap\n0,1,1,0\n1,1,0,1\n2,2,0,0\nverification=valid\n");
  const auto h = run({"ledger", "--hyperelliptic", "4"});
  EXPECT_EQ(h.code, 0);
  EXPECT_THAT(h.out, HasSubstr("verification: valid"));
}

TEST(CliExitCodes, Caps) {
  EXPECT_EQ(run({"enumerate", "--genus", "21", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--genus", "41"}).code, 2);
  EXPECT_EQ(run({"count", "--genus", "65"}).code, 2);
  EXPECT_EQ(run({"validate", "--gaps", "1", "--genus", "65"}).code, 2);
  const auto r = run({"count", "--genus", "21", "--method", "oracle"});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("20"));
}

TEST(CliExitCodes, Usage) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"enumerate"}).code, 64);
  EXPECT_EQ(run({"enumerate", "--genus", "3", "--method", "bfs"}).code, 64);
  EXPECT_EQ(run({"enumerate", "--genus", "3", "--format", "xml"}).code, 64);
  EXPECT_EQ(run({"enumerate", "--genus", "abc"}).code, 64);
  EXPECT_EQ(run({"enumerate", "--genus", "3", "--bogus"}).code, 64);
  EXPECT_EQ(run({"count", "--genus", "3", "--workers", "-2"}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliEnvironment, LowersCaps) {
  EnvCap cap("5");
  EXPECT_EQ(run({"enumerate", "--genus", "5"}).code, 0);
  const auto r = run({"enumerate", "--genus", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("GAPSEQ_MAX_GENUS"));
  EXPECT_EQ(run({"count", "--genus", "6"}).code, 2);
  EXPECT_EQ(run({"validate", "--hyperelliptic", "6"}).code, 2);
}

TEST(CliEnvironment, NeverRaisesCaps) {
  EnvCap cap("100");
  EXPECT_EQ(run({"enumerate", "--genus", "21", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"count", "--genus", "65"}).code, 2);
}

TEST(CliEnvironment, MalformedValue) {
  EnvCap cap("lots");
  EXPECT_EQ(run({"count", "--genus", "3"}).code, 64);
}

TEST(CliRoundTrip, EnumeratedRecordsValidate) {
  for (const std::string fmt : {"plain", "json", "csv"}) {
    for (int g = 0; g <= 5; ++g) {
      const auto r = run({"enumerate", "--genus", std::to_string(g), "--format", fmt});
      std::vector<testing::EmittedSequence> seqs;
      ASSERT_TRUE(testing::parse_enumerate_output(r.out, fmt, seqs));
      for (const auto& s : seqs) {
        EXPECT_EQ(run({"validate", "--gaps", s.gaps, "--genus", std::to_string(s.genus)}).code, 0)
            << fmt << " " << s.gaps;
      }
    }
  }
}

TEST(ParseGapList, Forms) {
  EXPECT_EQ(cli::parse_gap_list("1, 2 ,5"), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(cli::parse_gap_list(""), std::vector<int>{});
  EXPECT_EQ(cli::parse_gap_list("-3,0"), (std::vector<int>{-3, 0}));
  EXPECT_FALSE(cli::parse_gap_list("1,").has_value());
  EXPECT_FALSE(cli::parse_gap_list("1;2").has_value());
}

}  // namespace
}  // namespace gapseq

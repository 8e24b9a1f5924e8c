// Copyright 2026 The timedh Authors
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

#include "timedh/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "timedh/csv.hpp"

namespace timedh::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("timedh_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("papers.csv", "paper_id,pub_year,title\nP1,2000,\nP2,2001,\nP3,2004,\n");
    write("citations.csv",
          "paper_id,year,count\nP1,2000,1\nP1,2001,3\nP1,2003,2\nP2,2001,2\nP2,2002,1\nP3,2004,1\nP3,2005,1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const { return read_file(path(name)); }

  Result run_cli(std::vector<std::string> args) const {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  Result run_toy(std::vector<std::string> args) const {
    args.insert(args.begin() + 1, {path("papers.csv"), path("citations.csv")});
    return run_cli(std::move(args));
  }

  fs::path dir_;
};

TEST_F(CliTest, ValidateSummary) {
  const auto r = run_toy({"validate"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 papers, 2000\xE2\x80\x93" "2005, 11 citations\n");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ValidateMissingHeader) {
  write("papers.csv", "P1,2000,\n");
  const auto r = run_toy({"validate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MalformedHeader"), std::string::npos);
  EXPECT_NE(r.err.find("papers.csv:1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, ValidatePrePublicationCitation) {
  write("citations.csv", "paper_id,year,count\nP1,1999,1\n");
  EXPECT_EQ(run_toy({"validate"}).code, 1);
  const auto lenient = run_toy({"validate", "--lenient"});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_EQ(lenient.out, "3 papers, 2000\xE2\x80\x93" "2004, 1 citation\n");
}

TEST_F(CliTest, ValidateJsonAndMissingFile) {
  write("corpus.json", R"([{"id":"P3","pub_year":2004,"citations":{"2004":1,"2005":1}}])");
  EXPECT_EQ(run_cli({"validate", path("corpus.json")}).out, "1 paper, 2004\xE2\x80\x93" "2005, 2 citations\n");
  EXPECT_EQ(run_cli({"validate", path("nope.json")}).code, 1);
}

TEST_F(CliTest, EvolutionToyGrid) {
  const auto r = run_toy({"evolution", "--t-list", "0,1", "--from", "2000", "--to", "2001"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "year,t=0,t=1\n2000,1,1\n2001,1,2\n");
}

TEST_F(CliTest, EvolutionDefaults) {
  const auto r = run_toy({"evolution"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv::parse(r.out);
  EXPECT_EQ(rows.front().fields, (std::vector<std::string>{"year", "t=2", "t=3", "t=5", "t=10", "t=all"}));
  EXPECT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows.back().fields, (std::vector<std::string>{"2005", "1", "1", "2", "2", "2"}));
}

TEST_F(CliTest, EvolutionAllAtEndIsClassicH) {
  const auto r = run_toy({"evolution", "--t-list", "all", "--from", "2005", "--to", "2005"});
  EXPECT_EQ(r.out, "year,t=all\n2005,2\n");
}

TEST_F(CliTest, EvolutionInterpolatedSandwich) {
  const auto plain = csv::parse(run_toy({"evolution", "--t-list", "0,1,2,5,all"}).out);
  const auto interp = csv::parse(run_toy({"evolution", "--t-list", "0,1,2,5,all", "--interpolated"}).out);
  ASSERT_EQ(plain.size(), interp.size());
  EXPECT_EQ(interp[6].fields[5], "2.5000");
  for (std::size_t r = 1; r < plain.size(); ++r) {
    for (std::size_t c = 1; c < plain[r].fields.size(); ++c) {
      const std::string& cell = interp[r].fields[c];
      ASSERT_EQ(cell.size() - cell.find('.'), 5u);
      EXPECT_EQ(cell.substr(0, cell.find('.')), plain[r].fields[c]);
    }
  }
}

TEST_F(CliTest, EvolutionJsonAndUsageErrors) {
  const auto r = run_toy({"evolution", "--t-list", "0,1", "--from", "2000", "--to", "2001", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[1]["t=1"], 2);
  EXPECT_EQ(run_toy({"evolution", "--from", "2003", "--to", "2001"}).code, 2);
  EXPECT_EQ(run_toy({"evolution", "--t-list", "1,x"}).code, 2);
  EXPECT_EQ(run_toy({"evolution", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST_F(CliTest, AgingRows) {
  const auto r = run_toy({"aging", "--min-citations", "0", "--ref-year", "2003"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "rank,paper_id,pub_year,age,total,t25,t50,t75,t90,recently_cited\n"
            "1,P1,2000,3,6,1,1,3,3,1\n"
            "2,P2,2001,2,3,0,0,1,1,1\n");
}

TEST_F(CliTest, AgingOrderAndFilters) {
  const auto all = csv::parse(run_toy({"aging", "--min-citations", "0"}).out);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[1].fields[1], "P1");
  EXPECT_EQ(all[2].fields[1], "P2");
  EXPECT_EQ(all[3].fields[1], "P3");
  EXPECT_EQ(all[3].fields.back(), "1");
  EXPECT_EQ(all[1].fields.back(), "0");
  EXPECT_EQ(run_toy({"aging", "--min-citations", "100"}).out,
            "rank,paper_id,pub_year,age,total,t25,t50,t75,t90,recently_cited\n");
  EXPECT_EQ(csv::parse(run_toy({"aging", "--min-citations", "0", "--quantiles", "12.5,100"}).out)[0].fields[5],
            "t12.5");
}

TEST_F(CliTest, GroupsYearly) {
  const auto r = run_toy({"groups", "--mass-fraction", "0.5", "--mode", "yearly"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "group,rank_from,rank_to,mass\n1,1,1,6\n2,2,3,5\n\n"
            "group,t,value\n1,0,1\n1,1,3\n1,2,0\n1,3,2\n2,0,3\n2,1,2\n");
}

TEST_F(CliTest, GroupsCumulative) {
  const auto half = run_toy({"groups", "--mass-fraction", "0.5", "--mode", "cumulative"});
  EXPECT_NE(half.out.find("\n2,0,60.00\n2,1,100.00\n"), std::string::npos);
  EXPECT_NE(half.out.find("\n1,0,16.67\n1,1,66.67\n1,2,66.67\n1,3,100.00\n"), std::string::npos);

  const auto whole = run_toy({"groups", "--mass-fraction", "1.0"});
  EXPECT_NE(whole.out.find("group,rank_from,rank_to,mass\n1,1,3,11\n"), std::string::npos);
  EXPECT_EQ(whole.out.substr(whole.out.size() - 7), "100.00\n");

  const auto json = nlohmann::json::parse(run_toy({"groups", "--mass-fraction", "0.5", "--format", "json"}).out);
  EXPECT_EQ(json["groups"].size(), 2u);
  EXPECT_EQ(json["curves"].back()["value"], 100.0);
}

TEST_F(CliTest, GroupsErrors) {
  write("empty.json", "[]");
  EXPECT_EQ(run_cli({"groups", path("empty.json")}).code, 1);
  EXPECT_EQ(run_toy({"groups", "--mass-fraction", "0"}).code, 2);
  EXPECT_EQ(run_toy({"groups", "--mode", "weekly"}).code, 2);
}

TEST_F(CliTest, IndexSelectors) {
  EXPECT_EQ(run_toy({"index", "--year", "2001", "--t", "1"}).out, "2\n");
  EXPECT_EQ(run_toy({"index", "--pub-window", "*:2005", "--cite-window", "*:2005", "--interpolated"}).out,
            "2 / 2.5000\n");
  EXPECT_EQ(run_toy({"index", "--preset", "aif", "--year", "2002"}).out, "0.5000\n");
  EXPECT_EQ(run_toy({"index", "--preset", "h5", "--year", "2005"}).out, "2\n");
  EXPECT_EQ(run_toy({"index", "--preset", "h5", "--year", "2005", "--span", "0"}).out, "1\n");
  EXPECT_EQ(run_toy({"index", "--preset", "contemporary", "--year", "2005"}).out, "2\n");
  EXPECT_EQ(run_toy({"index", "--preset", "contemporary", "--gamma", "1", "--delta", "0"}).out, "2\n");
}

TEST_F(CliTest, IndexErrors) {
  EXPECT_EQ(run_toy({"index", "--year", "2001", "--t", "1", "--preset", "h5"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--year", "2001"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--pub-window", "2000:2001"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--t", "1"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--year", "2001", "--t", "1", "--span", "3"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--pub-window", "2001:2000", "--cite-window", "*:2005"}).code, 2);
  EXPECT_EQ(run_toy({"index", "--preset", "nope"}).code, 2);
  const auto aif = run_toy({"index", "--preset", "aif", "--year", "2000"});
  EXPECT_EQ(aif.code, 1);
  EXPECT_NE(aif.err.find("NoPapersInWindow"), std::string::npos);
}

TEST_F(CliTest, ExportRoundTrip) {
  fs::create_directories(dir_ / "out");
  EXPECT_EQ(run_toy({"export", "--format", "csv", "--output-dir", path("out")}).code, 0);
  EXPECT_EQ(read("out/papers.csv"), read("papers.csv"));
  EXPECT_EQ(read("out/citations.csv"), read("citations.csv"));

  EXPECT_EQ(run_toy({"export", "--format", "json", "--output", path("corpus.json")}).code, 0);
  const auto again = run_cli({"export", path("corpus.json"), "--format", "json"});
  EXPECT_EQ(again.out, read("corpus.json"));
}

TEST_F(CliTest, OutputFileAndDeterminism) {
  const std::vector<std::string> args{"evolution", "--t-list", "0,1,2,all", "--interpolated"};
  const auto first = run_toy(args);
  const auto second = run_toy(args);
  EXPECT_EQ(first.out, second.out);
  auto with_file = args;
  with_file.insert(with_file.end(), {"--output", path("evo.csv")});
  const auto r = run_toy(with_file);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read("evo.csv"), first.out);
}

}  // namespace
}  // namespace timedh::cli

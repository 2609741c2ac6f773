#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "support.hpp"

namespace spanlift {
namespace {

using namespace spanlift::testing;

constexpr const char* kHeader = "name,crossings,components,pd,expected_nonor_genus\n";

ErrorKind load_kind(const std::string& csv) {
  try {
    parse_census(csv);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::MalformedTuple;
}

TEST(Census, BuiltinRowCounts) {
  int knots = 0, links = 0;
  for (const auto& e : census()) (e.components == 1 ? knots : links)++;
  EXPECT_EQ(knots, 73);
  EXPECT_EQ(links, 26);
  EXPECT_EQ(census().front().name, "3_1");
  EXPECT_EQ(census().back().name, "8_14^2");
}

TEST(Census, EntriesSatisfyInvariants) {
  std::set<std::string> names;
  for (const auto& e : census()) {
    EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
    const Diagram d = parse_pd(e.pd);
    EXPECT_EQ(d.crossing_count(), e.crossings) << e.name;
    EXPECT_EQ(d.component_count(), e.components) << e.name;
    EXPECT_TRUE(is_alternating(d) && is_reduced(d) && is_connected(d)) << e.name;
    EXPECT_GT(e.expected, HalfInt{});
  }
}

TEST(Census, RowExample) {
  const auto rows = parse_census(std::string(kHeader) + "3_1,3,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1/2\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].name, "3_1");
  EXPECT_EQ(rows[0].expected, H("1/2"));
  EXPECT_EQ(rows[0].row, 2);
}

TEST(Census, DiagramInvalidCarriesRow) {
  const std::string csv = std::string(kHeader) + "3_1,3,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1/2\n" +
                          "bad,3,1,\"X(5,1,4,2) X(3,6,4,1) X(5,2,6,3)\",1/2\n";
  try {
    parse_census(csv);
    FAIL() << "expected DiagramInvalid";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiagramInvalid);
    EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(load_kind(std::string(kHeader) + "x,4,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1/2\n"),
            ErrorKind::DiagramInvalid);
  EXPECT_EQ(load_kind(std::string(kHeader) + "x,1,1,\"X(1,2,2,1)\",1/2\n"), ErrorKind::DiagramInvalid);
}

TEST(Census, SchemaErrors) {
  EXPECT_EQ(load_kind("name,pd\n"), ErrorKind::SchemaError);
  EXPECT_EQ(load_kind(""), ErrorKind::SchemaError);
  EXPECT_EQ(load_kind(std::string(kHeader) + "3_1,3,1,\"X(1,4,2,5)\n"), ErrorKind::SchemaError);
  EXPECT_EQ(load_kind(std::string(kHeader) + "3_1,3,1\n"), ErrorKind::SchemaError);
  EXPECT_EQ(load_kind(std::string(kHeader) + "3_1,3,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",0.5\n"),
            ErrorKind::SchemaError);
  EXPECT_EQ(load_kind(std::string(kHeader) + "3_1,three,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1/2\n"),
            ErrorKind::SchemaError);
  try {
    load_census("/nonexistent/census.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  }
  EXPECT_THROW(load_census("builtin:nope"), Error);
}

TEST(Census, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "spanlift_census.csv";
  {
    std::ofstream out(path);
    out << "# two rows\n" << kHeader << "3_1,3,1,\"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\",1/2\r\n";
    out << "4_1,4,1,\"" << census_entry("4_1").pd << "\",1\n";
  }
  const auto rows = load_census(path);
  ASSERT_EQ(rows.size(), 2u);
  const CensusReport rep = verify_census(rows);
  EXPECT_EQ(rep.matched, 2);
  std::remove(path.c_str());
}

TEST(Verify, SingleEntryFigureEight) {
  const CensusReport rep = verify_census({census_entry("4_1")});
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].computed.value, H("1"));
  EXPECT_TRUE(rep.entries[0].matched);
}

TEST(Verify, EmptyList) {
  const CensusReport rep = verify_census({});
  EXPECT_EQ(rep.total, 0);
  EXPECT_EQ(rep.matched, 0);
  EXPECT_EQ(rep.mismatched, 0);
  EXPECT_EQ(report_json(rep)["summary"]["total"], 0);
}

TEST(Verify, MismatchIsReportedNotThrown) {
  CensusEntry e = census_entry("3_1");
  e.expected = H("3/2");
  const CensusReport rep = verify_census({e, census_entry("4_1")});
  EXPECT_EQ(rep.matched, 1);
  EXPECT_EQ(rep.mismatched, 1);
  EXPECT_FALSE(rep.entries[0].matched);
  EXPECT_NE(report_tsv(rep).find("MISMATCH"), std::string::npos);
}

TEST(Verify, FlagsTheDisputedLink) {
  const CensusReport rep = verify_census({census_entry("6_3^2")});
  const CensusResult& r = rep.entries[0];
  EXPECT_EQ(r.computed.value, H("1"));
  EXPECT_TRUE(r.matched);
  ASSERT_TRUE(r.alternate);
  EXPECT_EQ(r.alternate->value, H("3/2"));
  EXPECT_FALSE(r.alternate_matched);
  const auto j = report_json(rep);
  EXPECT_TRUE(j["entries"][0]["flagged"].get<bool>());
  EXPECT_EQ(j["entries"][0]["alternate"]["value"]["num"], 3);
}

TEST(Verify, OrderIndependentAndDeterministic) {
  std::vector<CensusEntry> entries(census().begin(), census().begin() + 30);
  const std::string forward = report_json(verify_census(entries, 1)).dump();
  EXPECT_EQ(report_json(verify_census(entries, 8)).dump(), forward);

  std::vector<CensusEntry> shuffled = entries;
  std::mt19937 rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const CensusReport a = verify_census(entries, 1);
  const CensusReport b = verify_census(shuffled, 4);
  std::map<std::string, std::pair<HalfInt, bool>> by_name;
  for (const auto& r : a.entries) by_name[r.entry.name] = {r.computed.value, r.matched};
  for (const auto& r : b.entries) EXPECT_EQ(by_name.at(r.entry.name), std::make_pair(r.computed.value, r.matched));
  EXPECT_EQ(a.matched, b.matched);
}

TEST(Report, FormatsHalfIntegersExactly) {
  const CensusReport rep = verify_census({census_entry("3_1"), census_entry("4_1")});
  const auto j = report_json(rep);
  EXPECT_EQ(j["entries"][0]["computed"], (nlohmann::ordered_json{{"num", 1}, {"den", 2}}));
  EXPECT_EQ(j["entries"][1]["computed"], (nlohmann::ordered_json{{"num", 1}, {"den", 1}}));
  EXPECT_FALSE(j["entries"][0].contains("runtime_ms"));
  EXPECT_TRUE(report_json(rep, true)["entries"][0].contains("runtime_ms"));
  const std::string tsv = report_tsv(rep);
  EXPECT_NE(tsv.find("3_1\t3\t1\t1/2\t1/2\tmatch"), std::string::npos) << tsv;
  EXPECT_NE(tsv.find("# total=2 matched=2 mismatched=0"), std::string::npos);
}

}  // namespace
}  // namespace spanlift

#include <gtest/gtest.h>

#include "supercong/check_report.hpp"

using namespace supercong;

TEST(CheckReport, StatusTransitions) {
  CheckReport r;
  EXPECT_TRUE(r.passed());
  r.fail("first");
  EXPECT_EQ(r.status, CheckStatus::fail);
  r.error("boom");
  EXPECT_EQ(r.status, CheckStatus::error);
  r.fail("later");
  EXPECT_EQ(r.status, CheckStatus::error);
  EXPECT_EQ(r.notes.size(), 3u);
}

TEST(CheckReport, ObserveKeepsMinimum) {
  CheckReport r;
  r.observe(Valuation::infinity());
  EXPECT_TRUE(r.min_valuation->is_infinite());
  r.observe(Valuation(6)).observe(Valuation(4)).observe(Valuation(5));
  EXPECT_EQ(*r.min_valuation, Valuation(4));
}

TEST(CheckReport, Lookup) {
  CheckReport r;
  r.param("p", 5).param("mode", "x");
  r.witness("a", ExactRational(3)).witness("b", Valuation(2));
  EXPECT_EQ(*r.find_param("p"), "5");
  EXPECT_EQ(r.find_param("missing"), nullptr);
  EXPECT_EQ(std::get<Valuation>(r.find_witness("b")->value), Valuation(2));
  EXPECT_EQ(r.find_witness("c"), nullptr);
}

TEST(CheckStatus, StringRoundTrip) {
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::error}) EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
}

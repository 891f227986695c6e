#include <gtest/gtest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "wsnpc/scenario.hpp"
#include "wsnpc/units.hpp"

using namespace wsnpc;

namespace {

bool contains(const std::vector<std::string>& list, const std::string& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

Scenario basic() { return fixture::scenario({fixture::sensor("s1", 10, 0), fixture::sink("b", 0, 0)}); }

}  // namespace

TEST(Validate, CaseStudyScenarioIsClean) { EXPECT_TRUE(validate(basic()).empty()); }

TEST(Validate, NoSensors) {
  Scenario s = fixture::scenario({fixture::sink("b", 0, 0)});
  EXPECT_EQ(validate(s), std::vector<std::string>{"no sensor locations"});
}

TEST(Validate, NoSinks) {
  Scenario s = fixture::scenario({fixture::sensor("s", 0, 0)});
  EXPECT_TRUE(contains(validate(s), "no sink locations"));
}

TEST(Validate, ZeroInterestRate) {
  Scenario s = basic();
  s.econ.interest_rate = 0.0;
  EXPECT_EQ(validate(s), std::vector<std::string>{"interest_rate must be > 0"});
}

TEST(Validate, NamesOffendingLocationFields) {
  Scenario s = basic();
  s.locations.push_back(fixture::sensor("s1", 5, 5));
  s.locations.push_back(fixture::relay("r", 1, 1));
  s.locations.back().data_rate = 3.0;
  s.locations[0].data_rate = 0.0;
  const auto v = validate(s);
  EXPECT_TRUE(contains(v, "locations[0].data_rate must be > 0 for sensors"));
  EXPECT_TRUE(contains(v, "locations[2].id duplicates 's1'"));
  EXPECT_TRUE(contains(v, "locations[3].data_rate must be 0 for relays and sinks"));
}

TEST(Validate, RadioInvariants) {
  RadioModel r = rf230_radio();
  EXPECT_TRUE(validate(r).empty());
  r.path_loss_exponent = 1.5;
  std::swap(r.tx_power_table[0], r.tx_power_table[1]);
  const auto v = validate(r);
  EXPECT_TRUE(contains(v, "radio.path_loss_exponent must be >= 2"));
  EXPECT_TRUE(contains(v, "radio.tx_power_table must be strictly increasing in signal power"));
  r.tx_power_table.clear();
  EXPECT_TRUE(contains(validate(r), "radio.tx_power_table must be non-empty"));
}

TEST(Validate, IsPureAndIdempotent) {
  Scenario s = basic();
  s.econ.operational_lifetime = -1;
  s.econ.max_visits = 0;
  const auto first = validate(s);
  EXPECT_EQ(first.size(), 2u);
  EXPECT_EQ(validate(s), first);
}

TEST(Economics, LaborRepeatsLastEntry) {
  EconomicParams e;
  e.labor_costs = {500, 700};
  EXPECT_EQ(e.labor(1), 500);
  EXPECT_EQ(e.labor(2), 700);
  EXPECT_EQ(e.labor(9), 700);
}

TEST(Economics, FailureRateConversion) {
  EconomicParams e;
  e.failure_rate_per_hour = 1e-6;
  EXPECT_DOUBLE_EQ(e.failure_rate_per_year(), 8.76e-3);
}

TEST(Scenario, CountsAndLookup) {
  Scenario s = basic();
  s.locations.push_back(fixture::relay("r", 1, 1));
  EXPECT_EQ(s.count(LocationKind::kSensor), 1u);
  EXPECT_EQ(s.count(LocationKind::kCandidateRelay), 1u);
  EXPECT_EQ(s.index_of("r"), 2u);
  EXPECT_EQ(s.index_of("zz"), Scenario::npos);
}

TEST(Units, YearConstants) {
  EXPECT_EQ(kSecondsPerYear, 365.0 * 86400.0);
  EXPECT_EQ(kHoursPerYear, 365.0 * 24.0);
}

TEST(Units, GuardedFloorKeepsNearIntegers) {
  EXPECT_EQ(guarded_floor(10.0), 10);
  EXPECT_EQ(guarded_floor(std::nextafter(10.0, 0.0)), 10);
  EXPECT_EQ(guarded_floor(9.99), 9);
  EXPECT_EQ(guarded_floor(0.0), 0);
  EXPECT_EQ(guarded_floor(-3.0), 0);
}

TEST(Units, DbmRoundTrip) {
  EXPECT_NEAR(dbm_to_watts(0.0), 1e-3, 1e-18);
  EXPECT_NEAR(watts_to_dbm(dbm_to_watts(-17.2)), -17.2, 1e-12);
}

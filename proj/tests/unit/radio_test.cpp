#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wsnpc/error.hpp"
#include "wsnpc/radio.hpp"

using namespace wsnpc;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double oracle_friis(double d, const RadioModel& r) {
  return oracle::friis(d, r.rx_sensitivity, r.antenna_gain, r.wavelength, r.path_loss_exponent,
                       r.near_field_distance);
}

}  // namespace

TEST(Friis, IdentityConfigurationReturnsSensitivity) {
  RadioModel r = rf230_radio();
  r.antenna_gain = 1.0;
  r.wavelength = 4.0 * M_PI * r.near_field_distance;
  EXPECT_NEAR(friis_required_power(r.near_field_distance, r) / r.rx_sensitivity, 1.0, 1e-14);
}

TEST(Friis, CaseStudyRadioAtOneAndTenMetres) {
  const RadioModel r = rf230_radio();
  EXPECT_LT(rel(friis_required_power(1.0, r), oracle_friis(1.0, r)), 1e-12);
  EXPECT_NEAR(friis_required_power(1.0, r), 3.568e-10, 0.001e-10);
  EXPECT_NEAR(friis_required_power(10.0, r), 3.568e-6, 0.001e-6);
  EXPECT_NEAR(watts_to_dbm(friis_required_power(10.0, r)), -24.5, 0.05);
}

TEST(Friis, DoublingDistanceScalesByTwoToGamma) {
  RadioModel r = rf230_radio();
  for (double gamma : {2.0, 3.0, 4.0}) {
    r.path_loss_exponent = gamma;
    for (double d : {1.0, 3.7, 20.0})
      EXPECT_LT(rel(friis_required_power(2 * d, r) / friis_required_power(d, r), std::pow(2.0, gamma)), 1e-13);
  }
}

TEST(Friis, NearFieldClampsToReferenceDistance) {
  const RadioModel r = rf230_radio();
  EXPECT_EQ(friis_required_power(0.2, r), friis_required_power(1.0, r));
  EXPECT_EQ(friis_required_power(0.0, r), friis_required_power(1.0, r));
}

TEST(Friis, NonFiniteResultIsInvalidModel) {
  const RadioModel r = rf230_radio();
  EXPECT_THROW(friis_required_power(1e300, r), InvalidRadioModel);
}

TEST(TxLevel, SelectsSmallestCoveringLevel) {
  const RadioModel r = rf230_radio();
  EXPECT_EQ(select_tx_level(1e-12, r), 0u);
  EXPECT_EQ(select_tx_level(r.tx_power_table[7].signal_power, r), 7u);
  EXPECT_EQ(select_tx_level(std::nextafter(r.tx_power_table[7].signal_power, 1.0), r), 8u);
  EXPECT_EQ(select_tx_level(r.tx_power_table.back().signal_power, r), 15u);
  EXPECT_THROW(select_tx_level(r.tx_power_table.back().signal_power * 1.001, r), LinkInfeasible);
}

TEST(TxLevel, MonotoneInDistance) {
  const RadioModel r = rf230_radio();
  std::size_t prev = 0;
  for (double d = 1.0; d < 48.0; d += 0.25) {
    const std::size_t lvl = select_tx_level(friis_required_power(d, r), r);
    EXPECT_GE(lvl, prev);
    prev = lvl;
  }
}

TEST(RadioTable, CurrentIncreasesWithPower) {
  const RadioModel r = rf230_radio();
  ASSERT_EQ(r.tx_power_table.size(), 16u);
  for (std::size_t i = 1; i < r.tx_power_table.size(); ++i)
    EXPECT_GT(r.tx_power_table[i].current, r.tx_power_table[i - 1].current);
  EXPECT_NEAR(watts_to_dbm(r.tx_power_table.back().signal_power), 3.0, 1e-12);
}

TEST(Energy, PerBitFromCurrentAndBitrate) {
  const RadioModel r = rf230_radio();
  EXPECT_DOUBLE_EQ(rx_energy_per_bit(r), 3.0 * 15.5e-3 / 250e3);
  EXPECT_DOUBLE_EQ(tx_energy_per_bit(r, 15), 3.0 * 16.5e-3 / 250e3);
}

TEST(BuildLinks, OutOfRangePairHasNoLink) {
  const Scenario s = fixture::scenario({fixture::sensor("s", 60, 0), fixture::sink("b", 0, 0)});
  EXPECT_TRUE(build_links(s).empty());
}

TEST(BuildLinks, SensorFiveMetresFromSink) {
  const Scenario s = fixture::scenario({fixture::sensor("s", 5, 0), fixture::sink("b", 0, 0)});
  const auto links = build_links(s);
  ASSERT_EQ(links.size(), 1u);
  const Link& l = links[0];
  EXPECT_EQ(l.from, 0u);
  EXPECT_EQ(l.to, 1u);
  EXPECT_DOUBLE_EQ(l.distance, 5.0);
  const std::size_t lvl = select_tx_level(oracle_friis(5.0, s.radio), s.radio);
  EXPECT_EQ(l.tx_level, lvl);
  EXPECT_DOUBLE_EQ(l.tx_energy, s.radio.supply_voltage * s.radio.tx_power_table[lvl].current / s.radio.bitrate);
  EXPECT_DOUBLE_EQ(l.rx_energy, rx_energy_per_bit(s.radio));
}

TEST(BuildLinks, CompleteGraphCountAndSinksOnlyReceive) {
  std::vector<Location> locs{fixture::sink("b", 0, 0)};
  const int n = 5;
  for (int i = 0; i < n; ++i) locs.push_back(fixture::relay("r" + std::to_string(i), 2.0 * i + 1, 1.0));
  locs[1] = fixture::sensor("s", 1, 1);
  const Scenario s = fixture::scenario(locs);
  const auto links = build_links(s);
  EXPECT_EQ(links.size(), static_cast<std::size_t>(n * (n - 1) + n));
  for (const Link& l : links) {
    EXPECT_NE(l.from, 0u);
    EXPECT_GT(l.distance, 0.0);
    EXPECT_EQ(l.rx_energy, links[0].rx_energy);
    EXPECT_GE(s.radio.tx_power_table[l.tx_level].signal_power, friis_required_power(l.distance, s.radio));
  }
}

#include "wsnpc/radio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wsnpc/error.hpp"

namespace wsnpc {

double friis_required_power(double d, const RadioModel& radio) {
  const double d0 = radio.near_field_distance;
  const double dist = std::max(d, d0);
  const double four_pi_d0 = 4.0 * std::numbers::pi * d0;
  const double gain2 = radio.antenna_gain * radio.antenna_gain;
  const double p = radio.rx_sensitivity * four_pi_d0 * four_pi_d0 /
                   (gain2 * radio.wavelength * radio.wavelength) *
                   std::pow(dist / d0, radio.path_loss_exponent);
  if (!std::isfinite(p) || p < 0.0)
    throw InvalidRadioModel("Friis transmit power is not finite at d = " + std::to_string(d) + " m");
  return p;
}

std::size_t select_tx_level(double required, const RadioModel& radio) {
  const auto& table = radio.tx_power_table;
  auto it = std::lower_bound(table.begin(), table.end(), required,
                             [](const TxLevel& lv, double r) { return lv.signal_power < r; });
  if (it == table.end()) throw LinkInfeasible("link infeasible at any power level");
  return static_cast<std::size_t>(it - table.begin());
}

double rx_energy_per_bit(const RadioModel& radio) {
  return radio.supply_voltage * radio.rx_current / radio.bitrate;
}

double tx_energy_per_bit(const RadioModel& radio, std::size_t level) {
  return radio.supply_voltage * radio.tx_power_table.at(level).current / radio.bitrate;
}

std::vector<Link> build_links(const Scenario& scenario) {
  const auto& locs = scenario.locations;
  const RadioModel& radio = scenario.radio;
  const double rx = rx_energy_per_bit(radio);
  const double max_power = radio.tx_power_table.empty() ? 0.0 : radio.tx_power_table.back().signal_power;

  std::vector<Link> links;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    if (locs[i].is_sink()) continue;
    for (std::size_t j = 0; j < locs.size(); ++j) {
      if (i == j) continue;
      const double d = distance(locs[i].position, locs[j].position);
      const double required = friis_required_power(d, radio);
      if (required > max_power) continue;
      Link link;
      link.from = i;
      link.to = j;
      link.distance = d;
      link.tx_level = select_tx_level(required, radio);
      link.tx_energy = tx_energy_per_bit(radio, link.tx_level);
      link.rx_energy = rx;
      links.push_back(link);
    }
  }
  return links;
}

RadioModel rf230_radio() {
  RadioModel r;
  r.supply_voltage = 3.0;
  r.bitrate = 250e3;
  r.rx_current = 15.5e-3;
  r.rx_sensitivity = dbm_to_watts(-101.0);
  r.antenna_gain = 1.5;
  r.wavelength = 0.125;
  r.path_loss_exponent = 4.0;
  r.near_field_distance = 1.0;
  // (dBm, mA); current = quadratic through (3, 16.5), (0, 14.5), (-17, 9.5).
  constexpr double kLevels[16][2] = {
      {-17.2, 9.505},  {-12.2, 9.821},  {-9.2, 10.457}, {-7.2, 11.068},
      {-5.2, 11.828},  {-4.2, 12.263},  {-3.2, 12.736}, {-2.2, 13.246},
      {-1.2, 13.794},  {-0.2, 14.379},  {0.5, 14.810},  {1.1, 15.194},
      {1.6, 15.525},   {2.1, 15.865},   {2.6, 16.214},  {3.0, 16.500},
  };
  for (const auto& lv : kLevels) r.tx_power_table.push_back({dbm_to_watts(lv[0]), lv[1] * 1e-3});
  return r;
}

}  // namespace wsnpc

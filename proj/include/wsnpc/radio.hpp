#pragma once

#include <cstddef>
#include <vector>

#include "wsnpc/scenario.hpp"

namespace wsnpc {

struct Link {
  std::size_t from = 0;  // location index
  std::size_t to = 0;
  double distance = 0.0;   // m
  double tx_energy = 0.0;  // J/bit at the sender
  double rx_energy = 0.0;  // J/bit at the receiver
  std::size_t tx_level = 0;
};

/// Transmit signal power needed for the receiver to see `rx_sensitivity`
/// at distance `d` under the Friis far-field model. Distances inside the
/// near field are treated as `near_field_distance`.
double friis_required_power(double d, const RadioModel& radio);

/// Smallest table index whose signal power covers `required`.
/// Throws LinkInfeasible when even the top level is too weak.
std::size_t select_tx_level(double required, const RadioModel& radio);

double rx_energy_per_bit(const RadioModel& radio);
double tx_energy_per_bit(const RadioModel& radio, std::size_t level);

/// Directed links for every in-range ordered pair. Sinks only receive.
std::vector<Link> build_links(const Scenario& scenario);

/// 16-level transceiver model for the case study (3 V, 250 kbit/s, -101 dBm
/// sensitivity, dipole gain 1.5, 2.4 GHz). The current column is a quadratic
/// fit through three datasheet anchor points; replace it when a measured
/// table is available.
RadioModel rf230_radio();

}  // namespace wsnpc

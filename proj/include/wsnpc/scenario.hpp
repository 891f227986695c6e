#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsnpc/units.hpp"

namespace wsnpc {

enum class LocationKind { kSensor, kSink, kCandidateRelay };

const char* to_string(LocationKind kind);

struct Position {
  double x = 0.0;  // m
  double y = 0.0;  // m
};

double distance(const Position& a, const Position& b);

struct Location {
  std::string id;
  LocationKind kind = LocationKind::kSensor;
  Position position;
  double data_rate = 0.0;     // bits/s, sensors only
  double sense_energy = 0.0;  // J/bit, sensors only

  bool is_sensor() const { return kind == LocationKind::kSensor; }
  bool is_sink() const { return kind == LocationKind::kSink; }
  bool is_relay() const { return kind == LocationKind::kCandidateRelay; }
};

/// One discrete transmit setting: radiated signal power and the supply current it draws.
struct TxLevel {
  double signal_power = 0.0;  // W
  double current = 0.0;       // A
};

struct RadioModel {
  double supply_voltage = 3.0;           // V
  double bitrate = 250e3;                // bits/s
  double rx_current = 0.0;               // A
  std::vector<TxLevel> tx_power_table;   // strictly increasing in signal_power
  double rx_sensitivity = 0.0;           // W
  double antenna_gain = 1.0;             // unitless, same at both link ends
  double wavelength = 0.125;             // m
  double path_loss_exponent = 2.0;
  double near_field_distance = 1.0;      // m
};

struct EconomicParams {
  double node_cost = 0.0;                  // $/node
  double energy_cost = 0.0;                // $/J
  std::vector<double> labor_costs{0.0};    // $ per visit; the last entry repeats
  double interest_rate = 0.1;              // 1/year
  double operational_lifetime = 1.0;       // years
  double repair_cost = 0.0;                // $ per unscheduled repair
  double failure_rate_per_hour = 0.0;      // per node
  int max_visits = 1;
  double max_visit_expenditure = kInfinity;  // $ per visit

  /// Labor cost of visit k (1-based).
  double labor(int k) const;
  double failure_rate_per_year() const { return per_hour_to_per_year(failure_rate_per_hour); }
};

struct Scenario {
  std::vector<Location> locations;
  RadioModel radio;
  EconomicParams econ;

  std::size_t count(LocationKind kind) const;
  /// Index of the location with `id`, or npos.
  std::size_t index_of(const std::string& id) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Each returned string names the offending field. Empty means valid.
std::vector<std::string> validate(const Scenario& scenario);
std::vector<std::string> validate(const RadioModel& radio);
std::vector<std::string> validate(const EconomicParams& econ);
std::vector<std::string> validate_locations(const std::vector<Location>& locations);

/// Economic defaults of the gas-monitoring case study (alkaline cells, $1000 visits).
EconomicParams case_study_economics();

}  // namespace wsnpc

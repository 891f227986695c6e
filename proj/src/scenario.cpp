#include "wsnpc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wsnpc {

const char* to_string(LocationKind kind) {
  switch (kind) {
    case LocationKind::kSensor:
      return "sensor";
    case LocationKind::kSink:
      return "sink";
    case LocationKind::kCandidateRelay:
      return "candidate-relay";
  }
  return "unknown";
}

double distance(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double EconomicParams::labor(int k) const {
  if (labor_costs.empty()) return 0.0;
  const auto idx = static_cast<std::size_t>(std::max(k, 1) - 1);
  return labor_costs[std::min(idx, labor_costs.size() - 1)];
}

std::size_t Scenario::count(LocationKind kind) const {
  return static_cast<std::size_t>(std::count_if(locations.begin(), locations.end(),
                                                [kind](const Location& l) { return l.kind == kind; }));
}

std::size_t Scenario::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i].id == id) return i;
  return npos;
}

std::vector<std::string> validate_locations(const std::vector<Location>& locations) {
  std::vector<std::string> out;
  std::size_t sensors = 0;
  std::size_t sinks = 0;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    const Location& l = locations[i];
    const std::string field = "locations[" + std::to_string(i) + "]";
    if (!seen.insert(l.id).second) out.push_back(field + ".id duplicates '" + l.id + "'");
    if (!std::isfinite(l.position.x) || !std::isfinite(l.position.y))
      out.push_back(field + ".position must be finite");
    if (l.is_sensor()) {
      ++sensors;
      if (!(l.data_rate > 0.0)) out.push_back(field + ".data_rate must be > 0 for sensors");
      if (!(l.sense_energy >= 0.0)) out.push_back(field + ".sense_energy must be >= 0");
    } else {
      if (l.is_sink()) ++sinks;
      if (l.data_rate != 0.0) out.push_back(field + ".data_rate must be 0 for relays and sinks");
    }
  }
  if (sensors == 0) out.emplace_back("no sensor locations");
  if (sinks == 0) out.emplace_back("no sink locations");
  return out;
}

std::vector<std::string> validate(const RadioModel& radio) {
  std::vector<std::string> out;
  if (radio.tx_power_table.empty()) {
    out.emplace_back("radio.tx_power_table must be non-empty");
  } else {
    for (std::size_t i = 0; i < radio.tx_power_table.size(); ++i) {
      const TxLevel& lv = radio.tx_power_table[i];
      if (!(lv.signal_power > 0.0) || !(lv.current >= 0.0))
        out.push_back("radio.tx_power_table[" + std::to_string(i) + "] must have power > 0 and current >= 0");
      if (i > 0 && !(lv.signal_power > radio.tx_power_table[i - 1].signal_power))
        out.emplace_back("radio.tx_power_table must be strictly increasing in signal power");
    }
  }
  if (!(radio.rx_sensitivity > 0.0)) out.emplace_back("radio.rx_sensitivity must be > 0");
  if (!(radio.path_loss_exponent >= 2.0)) out.emplace_back("radio.path_loss_exponent must be >= 2");
  if (!(radio.near_field_distance > 0.0)) out.emplace_back("radio.near_field_distance must be > 0");
  if (!(radio.bitrate > 0.0)) out.emplace_back("radio.bitrate must be > 0");
  if (!(radio.supply_voltage > 0.0)) out.emplace_back("radio.supply_voltage must be > 0");
  if (!(radio.rx_current >= 0.0)) out.emplace_back("radio.rx_current must be >= 0");
  if (!(radio.antenna_gain > 0.0)) out.emplace_back("radio.antenna_gain must be > 0");
  if (!(radio.wavelength > 0.0)) out.emplace_back("radio.wavelength must be > 0");
  return out;
}

std::vector<std::string> validate(const EconomicParams& econ) {
  std::vector<std::string> out;
  if (!(econ.interest_rate > 0.0)) out.emplace_back("interest_rate must be > 0");
  if (!(econ.operational_lifetime > 0.0)) out.emplace_back("operational_lifetime must be > 0");
  if (econ.max_visits < 1) out.emplace_back("max_visits must be >= 1");
  if (!(econ.node_cost >= 0.0)) out.emplace_back("node_cost must be >= 0");
  if (!(econ.energy_cost >= 0.0)) out.emplace_back("energy_cost must be >= 0");
  if (!(econ.repair_cost >= 0.0)) out.emplace_back("repair_cost must be >= 0");
  if (!(econ.failure_rate_per_hour >= 0.0)) out.emplace_back("failure_rate_per_hour must be >= 0");
  if (!(econ.max_visit_expenditure >= 0.0)) out.emplace_back("max_visit_expenditure must be >= 0");
  if (econ.labor_costs.empty()) out.emplace_back("labor_costs must be non-empty");
  for (std::size_t i = 0; i < econ.labor_costs.size(); ++i)
    if (!(econ.labor_costs[i] >= 0.0)) out.push_back("labor_costs[" + std::to_string(i) + "] must be >= 0");
  return out;
}

std::vector<std::string> validate(const Scenario& scenario) {
  std::vector<std::string> out = validate_locations(scenario.locations);
  for (auto& v : validate(scenario.radio)) out.push_back(std::move(v));
  for (auto& v : validate(scenario.econ)) out.push_back(std::move(v));
  return out;
}

EconomicParams case_study_economics() {
  EconomicParams e;
  e.node_cost = 10.0;
  e.energy_cost = 20e-6;
  e.labor_costs = {1000.0};
  e.interest_rate = 0.1;
  e.operational_lifetime = 10.0;
  e.repair_cost = 1000.0;
  e.failure_rate_per_hour = 0.75e-6;
  e.max_visits = 30;
  return e;
}

}  // namespace wsnpc

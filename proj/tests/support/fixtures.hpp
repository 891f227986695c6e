#pragma once

#include <string>
#include <vector>

#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/npc.hpp"
#include "wsnpc/radio.hpp"
#include "wsnpc/scenario.hpp"

namespace fixture {

/// Gas-monitoring defaults: rho = 6.2 W, 150 nodes at $10, $1000 visits.
inline wsnpc::LifetimeFunction case_study_lf(double labor = 1000.0, double node_cost = 10.0) {
  return wsnpc::LifetimeFunction::from_energy_rate(20e-6, 6.2, 150 * node_cost, {labor});
}

inline wsnpc::UnscheduledStream case_study_failures(double mtbf = 1.0) { return {mtbf, 1000.0, 10.0}; }

inline wsnpc::Location sensor(std::string id, double x, double y, double rate = 1000.0, double sense = 0.0) {
  return {std::move(id), wsnpc::LocationKind::kSensor, {x, y}, rate, sense};
}
inline wsnpc::Location sink(std::string id, double x, double y) {
  return {std::move(id), wsnpc::LocationKind::kSink, {x, y}, 0.0, 0.0};
}
inline wsnpc::Location relay(std::string id, double x, double y) {
  return {std::move(id), wsnpc::LocationKind::kCandidateRelay, {x, y}, 0.0, 0.0};
}

inline wsnpc::Scenario scenario(std::vector<wsnpc::Location> locations) {
  wsnpc::Scenario s;
  s.locations = std::move(locations);
  s.radio = wsnpc::rf230_radio();
  s.econ = wsnpc::case_study_economics();
  return s;
}

}  // namespace fixture

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wsnpc/deployment.hpp"
#include "wsnpc/document.hpp"
#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/npc.hpp"
#include "wsnpc/reliability.hpp"
#include "wsnpc/report.hpp"
#include "wsnpc/scheduler.hpp"

namespace wsnpc {

/// Everything the scheduling layer needs from the deployment layer.
struct NetworkModel {
  std::string mode;  // "topology", "fixed-power" or "lifetime-function"
  double network_power = 0.0;  // W, 0 when unknown
  std::size_t node_count = 0;  // 0 when unknown
  double hardware_cost = 0.0;
  double mtbf_years = kInfinity;
  std::optional<LifetimeFunction> lifetime_function;
  std::optional<VisitLifetime> deployment;
};

struct PipelineResult {
  Report report;
  NetworkModel network;
  UnscheduledStream failures;
  std::optional<VisitCountSearch> search;
  std::optional<SchedulerResult> evl;
  std::vector<SchedulerResult> evl_curve;
  std::optional<ChoiceRanking> reliability;
  double benchmark_npc = 0.0;
  bool visit_cap_exceeded = false;
};

/// Validate, size the network, schedule visits and rank hardware, as
/// selected by `document.run`. Errors carry the failing stage as a prefix.
PipelineResult run_pipeline(const ScenarioDocument& document);

/// Layer 1 on its own: validation plus the deployment or override values.
NetworkModel build_network_model(const ScenarioDocument& document);

/// Lifetime function of a variant; the node set and network power stay fixed.
LifetimeFunction variant_lifetime_function(const NetworkModel& network,
                                           const ScenarioVariant& variant);

std::vector<Table> figure_tables(const ScenarioDocument& document, const NetworkModel& network);

/// Linearly spaced energy payment rates for the savings sweep.
std::vector<double> phi_grid(double phi_min, double phi_max, int steps);

}  // namespace wsnpc

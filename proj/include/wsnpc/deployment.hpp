#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/radio.hpp"
#include "wsnpc/scenario.hpp"

namespace wsnpc {

struct LinkFlow {
  std::size_t from = 0;
  std::size_t to = 0;
  double rate = 0.0;  // bits/s

  bool operator==(const LinkFlow&) const = default;
};

/// Minimum-power routing over a fixed set of open locations.
struct Routing {
  std::vector<LinkFlow> flows;     // positive flows, ordered by (from, to)
  std::vector<double> node_power;  // W, one entry per location
  std::vector<std::size_t> next_hop;  // npos for sinks, closed and unreachable nodes
  double network_power = 0.0;      // rho = sum of node_power

  /// Open relays that carry traffic.
  std::vector<std::size_t> used_relays(const Scenario& scenario) const;
};

struct DeploymentPlan {
  std::vector<bool> open;
  std::vector<LinkFlow> flows;
  std::vector<double> node_power;  // W
  double network_power = 0.0;      // W
  double hardware_cost = 0.0;      // $
  std::size_t node_count = 0;

  std::vector<std::size_t> open_relays(const Scenario& scenario) const;
};

struct SearchStats {
  std::size_t nodes_explored = 0;
  bool proven_optimal = true;
};

/// Outcome of maximizing one visit's lifetime for a given expenditure.
struct VisitLifetime {
  double lifetime = 0.0;  // years
  DeploymentPlan plan;
  std::vector<double> node_energy;  // J allocated per location
  double hardware_expenditure = 0.0;
  double energy_expenditure = 0.0;
  double labor_expenditure = 0.0;
  SearchStats stats;
};

/// Caches the link graph of one scenario for repeated routing and
/// relay-placement solves. The scenario must outlive the optimizer.
class DeploymentOptimizer {
 public:
  explicit DeploymentOptimizer(const Scenario& scenario);
  DeploymentOptimizer(const Scenario& scenario, std::vector<Link> links);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<Link>& links() const { return links_; }

  /// Throws InfeasibleConnectivity if a sensor cannot reach a sink through open nodes.
  Routing route(const std::vector<bool>& open) const;

  /// Sensors and sinks plus the given relays.
  std::vector<bool> open_set(const std::vector<std::size_t>& relays) const;
  DeploymentPlan plan_for(const std::vector<bool>& open) const;

  /// Visit 1 searches relay subsets; later visits reuse `initial_plan`.
  VisitLifetime maximize(int k, double expenditure, const DeploymentPlan* initial_plan = nullptr) const;

  /// Relay set and budget whose optimal lifetime is exactly `years`.
  VisitLifetime deploy_for_lifetime(double years) const;

  /// Cap on branch-and-bound nodes; beyond it the best plan found is returned
  /// with stats.proven_optimal = false.
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }

 private:
  VisitLifetime evaluate(int k, double expenditure, DeploymentPlan plan) const;
  VisitLifetime search_relays(double expenditure) const;

  const Scenario& scenario_;
  std::vector<Link> links_;
  std::vector<std::vector<std::size_t>> out_links_;  // link indices per sender
  std::vector<std::size_t> relays_;
  std::size_t fixed_nodes_ = 0;
  std::size_t node_limit_ = 5'000'000;
};

Routing min_power_routing(const Scenario& scenario, const std::vector<bool>& open);

VisitLifetime maximize_visit_lifetime(const Scenario& scenario, int k, double expenditure,
                                      const DeploymentPlan* initial_plan = nullptr);

LifetimeFunction derive_lifetime_function(const Scenario& scenario, const DeploymentPlan& plan);

/// Network MTBF in years under 1-connectivity; +inf when nodes never fail.
double network_mtbf(std::size_t node_count, double failure_rate_per_hour);
double network_mtbf(const DeploymentPlan& plan, double failure_rate_per_hour);

}  // namespace wsnpc

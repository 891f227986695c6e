#include "wsnpc/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <tuple>
#include <utility>

#include "wsnpc/error.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr double kTieTolerance = 1e-12;

struct RouteAttempt {
  std::optional<Routing> routing;
  std::size_t stranded_sensor = kNone;
};

// Best-so-far solution of the relay search. Ties in lifetime go to fewer
// relays, then lower network power, then the lexicographically smaller id list.
struct Incumbent {
  double lifetime = -1.0;
  std::size_t relay_count = 0;
  double network_power = 0.0;
  std::vector<std::string> relay_ids;
  std::vector<bool> open;

  bool empty() const { return lifetime < 0.0; }
};

bool better(const Incumbent& a, const Incumbent& b) {
  if (b.empty()) return true;
  if (a.lifetime != b.lifetime) return a.lifetime > b.lifetime;
  if (a.relay_count != b.relay_count) return a.relay_count < b.relay_count;
  if (a.network_power != b.network_power) return a.network_power < b.network_power;
  return a.relay_ids < b.relay_ids;
}

double energy_rate_per_year(const Scenario& s, double network_power) {
  return s.econ.energy_cost * network_power * kSecondsPerYear;
}

}  // namespace

std::vector<std::size_t> Routing::used_relays(const Scenario& scenario) const {
  std::vector<std::size_t> out;
  std::vector<bool> used(scenario.locations.size(), false);
  for (const LinkFlow& f : flows) used[f.to] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i] && scenario.locations[i].is_relay()) out.push_back(i);
  return out;
}

std::vector<std::size_t> DeploymentPlan::open_relays(const Scenario& scenario) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < open.size(); ++i)
    if (open[i] && scenario.locations[i].is_relay()) out.push_back(i);
  return out;
}

DeploymentOptimizer::DeploymentOptimizer(const Scenario& scenario)
    : DeploymentOptimizer(scenario, build_links(scenario)) {}

DeploymentOptimizer::DeploymentOptimizer(const Scenario& scenario, std::vector<Link> links)
    : scenario_(scenario), links_(std::move(links)), out_links_(scenario.locations.size()) {
  for (std::size_t l = 0; l < links_.size(); ++l) out_links_[links_[l].from].push_back(l);
  for (std::size_t i = 0; i < scenario_.locations.size(); ++i) {
    if (scenario_.locations[i].is_relay())
      relays_.push_back(i);
    else
      ++fixed_nodes_;
  }
}

namespace {

RouteAttempt try_route(const Scenario& scenario, const std::vector<Link>& links,
                       const std::vector<std::vector<std::size_t>>& out_links, const std::vector<bool>& open) {
  const auto& locs = scenario.locations;
  const std::size_t n = locs.size();
  std::vector<std::vector<std::size_t>> in_links(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!open[u]) continue;
    for (std::size_t l : out_links[u])
      if (open[links[l].to]) in_links[links[l].to].push_back(l);
  }

  // Dijkstra toward the sinks over reversed links.
  std::vector<double> dist(n, kInfinity);
  std::vector<std::size_t> settle_rank(n, kNone);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < n; ++i) {
    if (locs[i].is_sink() && open[i]) {
      dist[i] = 0.0;
      heap.emplace(0.0, i);
    }
  }
  std::vector<std::size_t> settled;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settle_rank[v] != kNone || d > dist[v]) continue;
    settle_rank[v] = settled.size();
    settled.push_back(v);
    for (std::size_t l : in_links[v]) {
      const Link& link = links[l];
      const double nd = d + link.tx_energy + link.rx_energy;
      if (nd < dist[link.from]) {
        dist[link.from] = nd;
        heap.emplace(nd, link.from);
      }
    }
  }

  RouteAttempt attempt;
  for (std::size_t i = 0; i < n; ++i) {
    if (locs[i].is_sensor() && settle_rank[i] == kNone) {
      attempt.stranded_sensor = i;
      return attempt;
    }
  }

  Routing r;
  r.next_hop.assign(n, kNone);
  std::vector<std::size_t> hop_link(n, kNone);
  for (std::size_t u : settled) {
    if (locs[u].is_sink()) continue;
    double best = kInfinity;
    for (std::size_t l : out_links[u]) {
      const Link& link = links[l];
      if (!open[link.to] || settle_rank[link.to] == kNone || settle_rank[link.to] >= settle_rank[u]) continue;
      best = std::min(best, link.tx_energy + link.rx_energy + dist[link.to]);
    }
    for (std::size_t l : out_links[u]) {
      const Link& link = links[l];
      if (!open[link.to] || settle_rank[link.to] == kNone || settle_rank[link.to] >= settle_rank[u]) continue;
      const double cost = link.tx_energy + link.rx_energy + dist[link.to];
      if (cost > best * (1.0 + kTieTolerance)) continue;
      if (hop_link[u] == kNone || locs[link.to].id < locs[r.next_hop[u]].id) {
        hop_link[u] = l;
        r.next_hop[u] = link.to;
      }
    }
  }

  // Push traffic from the farthest nodes inward.
  std::vector<double> outflow(n, 0.0);
  r.node_power.assign(n, 0.0);
  for (auto it = settled.rbegin(); it != settled.rend(); ++it) {
    const std::size_t u = *it;
    const Location& loc = locs[u];
    if (loc.is_sensor()) {
      outflow[u] += loc.data_rate;
      r.node_power[u] += loc.sense_energy * loc.data_rate;
    }
    if (loc.is_sink() || outflow[u] <= 0.0) continue;
    const Link& link = links[hop_link[u]];
    r.node_power[u] += outflow[u] * link.tx_energy;
    r.node_power[link.to] += outflow[u] * link.rx_energy;
    outflow[link.to] += outflow[u];
    r.flows.push_back({u, link.to, outflow[u]});
  }
  std::sort(r.flows.begin(), r.flows.end(),
            [](const LinkFlow& a, const LinkFlow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  for (double p : r.node_power) r.network_power += p;
  attempt.routing = std::move(r);
  return attempt;
}

}  // namespace

Routing DeploymentOptimizer::route(const std::vector<bool>& open) const {
  if (open.size() != scenario_.locations.size())
    throw ValidationError("open set size does not match the location count");
  for (std::size_t i = 0; i < open.size(); ++i)
    if (!open[i] && !scenario_.locations[i].is_relay())
      throw ValidationError("sensor and sink '" + scenario_.locations[i].id + "' must be open");
  RouteAttempt attempt = try_route(scenario_, links_, out_links_, open);
  if (!attempt.routing)
    throw InfeasibleConnectivity("sensor '" + scenario_.locations[attempt.stranded_sensor].id +
                                 "' cannot reach any sink through open nodes");
  return std::move(*attempt.routing);
}

std::vector<bool> DeploymentOptimizer::open_set(const std::vector<std::size_t>& relays) const {
  std::vector<bool> open(scenario_.locations.size(), false);
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = !scenario_.locations[i].is_relay();
  for (std::size_t r : relays) open.at(r) = true;
  return open;
}

DeploymentPlan DeploymentOptimizer::plan_for(const std::vector<bool>& open) const {
  Routing r = route(open);
  DeploymentPlan plan;
  plan.open = open;
  plan.flows = std::move(r.flows);
  plan.node_power = std::move(r.node_power);
  plan.network_power = r.network_power;
  plan.node_count = static_cast<std::size_t>(std::count(open.begin(), open.end(), true));
  plan.hardware_cost = scenario_.econ.node_cost * static_cast<double>(plan.node_count);
  return plan;
}

VisitLifetime DeploymentOptimizer::evaluate(int k, double expenditure, DeploymentPlan plan) const {
  const double rate = energy_rate_per_year(scenario_, plan.network_power);
  if (!(rate > 0.0)) throw DegenerateNetwork("energy payment rate of the deployment is zero");
  VisitLifetime out;
  out.hardware_expenditure = k == 1 ? plan.hardware_cost : 0.0;
  out.labor_expenditure = scenario_.econ.labor(k);
  const double spendable = expenditure - out.hardware_expenditure - out.labor_expenditure;
  out.lifetime = spendable > 0.0 ? spendable / rate : 0.0;
  out.node_energy.resize(plan.node_power.size());
  const double seconds = out.lifetime * kSecondsPerYear;
  double joules = 0.0;
  for (std::size_t i = 0; i < plan.node_power.size(); ++i) {
    out.node_energy[i] = seconds * plan.node_power[i];
    joules += out.node_energy[i];
  }
  out.energy_expenditure = scenario_.econ.energy_cost * joules;
  out.plan = std::move(plan);
  return out;
}

VisitLifetime DeploymentOptimizer::search_relays(double expenditure) const {
  const EconomicParams& econ = scenario_.econ;
  const double labor = econ.labor(1);
  const auto& locs = scenario_.locations;

  std::vector<int> decision(locs.size(), -1);  // relays only: -1 free, 0 closed, 1 open
  auto mask_all_free_open = [&] {
    std::vector<bool> open(locs.size());
    for (std::size_t i = 0; i < locs.size(); ++i) open[i] = !locs[i].is_relay() || decision[i] != 0;
    return open;
  };

  RouteAttempt root = try_route(scenario_, links_, out_links_, mask_all_free_open());
  if (!root.routing)
    throw InfeasibleConnectivity("sensor '" + locs[root.stranded_sensor].id +
                                 "' cannot reach any sink even with every candidate relay open");

  // Branch on heavily used relays first.
  std::vector<std::size_t> usage(locs.size(), 0);
  for (std::size_t i = 0; i < locs.size(); ++i) {
    if (!locs[i].is_sensor()) continue;
    for (std::size_t v = root.routing->next_hop[i]; v != kNone; v = root.routing->next_hop[v])
      if (locs[v].is_relay()) ++usage[v];
  }
  std::vector<std::size_t> order = relays_;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (usage[a] != usage[b]) return usage[a] > usage[b];
    return locs[a].id < locs[b].id;
  });

  Incumbent best;
  SearchStats stats;

  auto lifetime_of = [&](std::size_t relay_count, double rho) {
    const double spendable =
        expenditure - labor - econ.node_cost * static_cast<double>(fixed_nodes_ + relay_count);
    return spendable > 0.0 ? spendable / energy_rate_per_year(scenario_, rho) : 0.0;
  };

  auto offer = [&](const std::vector<bool>& open, const Routing& routing) {
    Incumbent c;
    c.open = open;
    for (std::size_t r : relays_) {
      if (open[r]) {
        ++c.relay_count;
        c.relay_ids.push_back(locs[r].id);
      }
    }
    std::sort(c.relay_ids.begin(), c.relay_ids.end());
    c.network_power = routing.network_power;
    c.lifetime = lifetime_of(c.relay_count, c.network_power);
    if (better(c, best)) best = std::move(c);
  };

  std::function<void(std::size_t, std::size_t)> explore = [&](std::size_t depth, std::size_t committed) {
    if (++stats.nodes_explored > node_limit_) {
      stats.proven_optimal = false;
      return;
    }
    const std::vector<bool> relaxed = mask_all_free_open();
    RouteAttempt all = try_route(scenario_, links_, out_links_, relaxed);
    if (!all.routing) return;

    // Committed relays plus whatever the relaxed routing actually uses.
    std::vector<bool> used(locs.size(), false);
    for (const LinkFlow& f : all.routing->flows) used[f.to] = true;
    std::vector<bool> candidate(locs.size());
    for (std::size_t i = 0; i < locs.size(); ++i)
      candidate[i] = !locs[i].is_relay() || decision[i] == 1 || used[i];
    if (candidate == relaxed) {
      offer(candidate, *all.routing);
    } else {
      RouteAttempt c = try_route(scenario_, links_, out_links_, candidate);
      if (c.routing) offer(candidate, *c.routing);
    }

    if (depth == order.size()) return;
    const double bound = lifetime_of(committed, all.routing->network_power);
    if (bound <= 0.0 || bound * (1.0 + kTieTolerance) < best.lifetime) return;

    const std::size_t r = order[depth];
    const bool open_first = used[r];
    for (int pass = 0; pass < 2; ++pass) {
      const bool open_branch = (pass == 0) == open_first;
      decision[r] = open_branch ? 1 : 0;
      explore(depth + 1, committed + (open_branch ? 1 : 0));
      if (!stats.proven_optimal) break;
    }
    decision[r] = -1;
  };
  explore(0, 0);

  VisitLifetime out = evaluate(1, expenditure, plan_for(best.open));
  out.stats = stats;
  return out;
}

VisitLifetime DeploymentOptimizer::maximize(int k, double expenditure, const DeploymentPlan* initial_plan) const {
  if (k < 1) throw ValidationError("visit index must be >= 1");
  if (!(expenditure >= 0.0)) throw ValidationError("visit expenditure must be >= 0");
  if (k == 1) return search_relays(expenditure);
  if (initial_plan == nullptr)
    throw ValidationError("visit " + std::to_string(k) + " needs the deployment plan of visit 1");
  return evaluate(k, expenditure, *initial_plan);
}

VisitLifetime DeploymentOptimizer::deploy_for_lifetime(double years) const {
  const EconomicParams& econ = scenario_.econ;
  Routing all = route(open_set(relays_));
  DeploymentPlan plan = plan_for(open_set(all.used_relays(scenario_)));
  // The budget needed to reach `years` only shrinks as the plan improves,
  // so this settles after finitely many steps.
  VisitLifetime result;
  for (int iter = 0; iter < 64; ++iter) {
    const double budget =
        plan.hardware_cost + econ.labor(1) + energy_rate_per_year(scenario_, plan.network_power) * years;
    result = maximize(1, budget);
    if (result.plan.open == plan.open) return result;
    plan = result.plan;
  }
  throw SolverFailure("deployment budget iteration did not settle");
}

Routing min_power_routing(const Scenario& scenario, const std::vector<bool>& open) {
  return DeploymentOptimizer(scenario).route(open);
}

VisitLifetime maximize_visit_lifetime(const Scenario& scenario, int k, double expenditure,
                                      const DeploymentPlan* initial_plan) {
  return DeploymentOptimizer(scenario).maximize(k, expenditure, initial_plan);
}

LifetimeFunction derive_lifetime_function(const Scenario& scenario, const DeploymentPlan& plan) {
  if (!(plan.network_power > 0.0)) throw DegenerateNetwork("network power is zero");
  return LifetimeFunction::from_energy_rate(scenario.econ.energy_cost, plan.network_power, plan.hardware_cost,
                                            scenario.econ.labor_costs);
}

double network_mtbf(std::size_t node_count, double failure_rate_per_hour) {
  if (node_count == 0) throw ValidationError("MTBF needs at least one node");
  if (!(failure_rate_per_hour > 0.0)) return kInfinity;
  return 1.0 / (static_cast<double>(node_count) * per_hour_to_per_year(failure_rate_per_hour));
}

double network_mtbf(const DeploymentPlan& plan, double failure_rate_per_hour) {
  return network_mtbf(plan.node_count, failure_rate_per_hour);
}

}  // namespace wsnpc

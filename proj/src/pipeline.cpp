#include "wsnpc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wsnpc/error.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {
namespace {

template <typename F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

void throw_violations(const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string msg;
  for (const std::string& v : violations) msg += (msg.empty() ? "" : "; ") + v;
  throw ValidationError(msg);
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }
std::int64_t as_int(long long n) { return static_cast<std::int64_t>(n); }
std::int64_t as_int(int n) { return n; }
std::int64_t as_int(bool b) { return b ? 1 : 0; }

std::vector<double> labor_with(const EconomicParams& econ, const ScenarioVariant& variant) {
  if (variant.labor_cost) return {*variant.labor_cost};
  return econ.labor_costs;
}

UnscheduledStream stream_for(double mtbf, const EconomicParams& econ) {
  return {mtbf, econ.repair_cost, econ.operational_lifetime};
}

double mtbf_of(const NetworkModel& network, const ScenarioVariant& variant) {
  return variant.mtbf_years ? *variant.mtbf_years : network.mtbf_years;
}

// c N for the variant, or the fixed hardware cost when N is unknown.
double variant_hardware(const NetworkModel& network, const ScenarioVariant& variant) {
  if (variant.node_cost && network.node_count > 0) return *variant.node_cost * static_cast<double>(network.node_count);
  return network.hardware_cost;
}

void add_schedule_rows(Table& t, const SchedulerResult& r) {
  for (std::size_t k = 0; k < r.payments.size(); ++k) {
    t.add_row({std::string(to_string(r.method)), as_int(k + 1), r.payments[k], r.lifetimes[k], r.visit_times[k],
               r.costs[k].hardware, r.costs[k].energy, r.costs[k].labor, as_int(bool(r.clamped[k]))});
  }
}

std::vector<HardwareChoice> sweep_choices(const ScenarioDocument& doc) {
  if (!doc.hardware_choices.empty()) return doc.hardware_choices;
  const HardwareChoice base{"node", doc.scenario.econ.node_cost, doc.scenario.econ.failure_rate_per_hour, 1};
  return redundancy_choices(base, doc.figures.redundancy_min, doc.figures.redundancy_max);
}

std::size_t reference_choice(const std::vector<HardwareChoice>& choices) {
  for (std::size_t i = 0; i < choices.size(); ++i)
    if (choices[i].redundancy == 1) return i;
  return 0;
}

Table reliability_table(const std::string& name, const std::vector<HardwareChoice>& choices,
                        const ChoiceRanking& ranking) {
  Table t{name,
          {"choice", "redundancy", "cost", "failure_rate_per_hour", "repairs", "hardware_cost", "repair_npc", "total",
           "normalized", "best"},
          {}};
  const double ref = ranking.costs[reference_choice(choices)].total;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const ChoiceCost& c = ranking.costs[i];
    t.add_row({choices[i].id, as_int(choices[i].redundancy), choices[i].cost, choices[i].failure_rate_per_hour,
               as_int(c.repair_count), c.hardware, c.repairs, c.total, ref > 0.0 ? c.total / ref : 0.0,
               as_int(i == ranking.best)});
  }
  return t;
}

std::size_t reliability_locations(const ScenarioDocument& doc, const NetworkModel& network) {
  if (doc.reliability_locations) return *doc.reliability_locations;
  if (network.node_count == 0) throw ValidationError("hardware_choices/locations is required without a node count");
  return network.node_count;
}

}  // namespace

std::vector<double> phi_grid(double phi_min, double phi_max, int steps) {
  if (steps < 1 || !(phi_min > 0.0) || phi_max < phi_min)
    throw ValidationError("phi sweep needs 0 < phi_min <= phi_max and steps >= 1");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? phi_min : phi_min + (phi_max - phi_min) * i / (steps - 1));
  return out;
}

NetworkModel build_network_model(const ScenarioDocument& doc) {
  const Scenario& s = doc.scenario;
  stage("validate", [&] {
    throw_violations(validate(s.econ));
    if (doc.has_topology()) throw_violations(validate(s));
    return 0;
  });

  return stage("lifetime", [&] {
    NetworkModel net;
    if (doc.has_topology() && !doc.overrides.network_power) {
      net.mode = "topology";
      DeploymentOptimizer optimizer(s);
      VisitLifetime dep = optimizer.deploy_for_lifetime(s.econ.operational_lifetime);
      net.network_power = dep.plan.network_power;
      net.node_count = dep.plan.node_count;
      net.hardware_cost = dep.plan.hardware_cost;
      net.deployment = std::move(dep);
    } else if (doc.overrides.network_power) {
      net.mode = "fixed-power";
      net.network_power = *doc.overrides.network_power;
      if (!doc.overrides.node_count) throw ValidationError("overrides.node_count is required with network_power");
      net.node_count = *doc.overrides.node_count;
    } else {
      net.mode = "lifetime-function";
      net.lifetime_function = doc.lifetime_function;
      net.hardware_cost = doc.lifetime_function->hardware(1);
    }
    if (doc.overrides.node_count) net.node_count = *doc.overrides.node_count;
    if (net.mode != "lifetime-function") {
      net.hardware_cost = s.econ.node_cost * static_cast<double>(net.node_count);
      net.lifetime_function =
          LifetimeFunction::from_energy_rate(s.econ.energy_cost, net.network_power, net.hardware_cost, s.econ.labor_costs);
    }
    if (doc.overrides.mtbf_years) {
      net.mtbf_years = *doc.overrides.mtbf_years;
    } else if (s.econ.failure_rate_per_hour <= 0.0) {
      net.mtbf_years = kInfinity;
    } else {
      if (net.node_count == 0) throw ValidationError("MTBF needs overrides/node_count or overrides/mtbf_years");
      net.mtbf_years = network_mtbf(net.node_count, s.econ.failure_rate_per_hour);
    }
    return net;
  });
}

LifetimeFunction variant_lifetime_function(const NetworkModel& network,
                                           const ScenarioVariant& variant) {
  return LifetimeFunction(network.lifetime_function->slope(), variant_hardware(network, variant),
                          variant.labor_cost ? std::vector<double>{*variant.labor_cost}
                                             : network.lifetime_function->labor_costs());
}

std::vector<Table> figure_tables(const ScenarioDocument& doc, const NetworkModel& network) {
  const EconomicParams& econ = doc.scenario.econ;
  const FigureOptions& fig = doc.figures;
  const double v = econ.interest_rate;
  const double L = econ.operational_lifetime;
  const int kmax = econ.max_visits;
  std::vector<Table> tables;

  // NPC against K for each labor cost, normalized to K = 1 at the reference labor cost.
  {
    Table t{"fig_npc_vs_visits",
            {"labor_cost", "visits", "onpc_npc", "evl_npc", "onpc_normalized", "evl_normalized", "too_many_visits"},
            {}};
    ScenarioVariant ref;
    ref.labor_cost = fig.reference_labor_cost;
    const UnscheduledStream failures = stream_for(network.mtbf_years, econ);
    const double norm =
        optimal_payments(1, variant_lifetime_function(network, ref), v, L, failures).npc;
    for (double zeta : fig.labor_sweep) {
      ScenarioVariant var;
      var.labor_cost = zeta;
      const LifetimeFunction lf = variant_lifetime_function(network, var);
      const VisitCountSearch search = optimal_number_of_visits(kmax, lf, v, L, failures);
      for (const SchedulerResult& r : search.per_visit_count) {
        const double evl = evl_schedule(r.visits, lf, v, L, failures).npc;
        t.add_row({zeta, as_int(r.visits), r.npc, evl, r.npc / norm, evl / norm, as_int(r.too_many_visits)});
      }
    }
    tables.push_back(std::move(t));
  }

  // Percent savings against the energy payment rate.
  {
    Table t{"fig_savings_vs_phi",
            {"variant", "phi_usd_per_s", "optimal_visits", "benchmark_npc", "optimal_npc", "percent_savings"},
            {}};
    const std::vector<double> phis = phi_grid(fig.phi_min, fig.phi_max, fig.phi_steps);
    for (const ScenarioVariant& var : fig.variants) {
      const UnscheduledStream failures = stream_for(mtbf_of(network, var), econ);
      for (double phi : phis) {
        const LifetimeFunction lf(1.0 / (phi * kSecondsPerYear), variant_hardware(network, var),
                                  labor_with(econ, var));
        const VisitCountSearch search = optimal_number_of_visits(kmax, lf, v, L, failures);
        const double s = search.per_visit_count.front().npc;
        t.add_row({var.name, phi, as_int(search.best.visits), s, search.best.npc,
                   percent_savings(s, search.best.npc)});
      }
    }
    tables.push_back(std::move(t));
  }

  // Redundancy sweep, normalized to a single node per location.
  if (network.node_count > 0 || doc.reliability_locations) {
    const std::vector<HardwareChoice> choices = sweep_choices(doc);
    const ChoiceRanking ranking = best_choice(choices, reliability_locations(doc, network), L, v, econ.repair_cost);
    tables.push_back(reliability_table("fig_redundancy", choices, ranking));
  }

  // Discounted cost split against K per variant; labor covers energy visits only.
  {
    Table t{"fig_cost_breakdown",
            {"variant", "visits", "hardware", "repairs", "energy", "labor", "total", "normalized"},
            {}};
    const UnscheduledStream base_failures = stream_for(network.mtbf_years, econ);
    const double norm = optimal_payments(1, *network.lifetime_function, v, L, base_failures).npc;
    for (const ScenarioVariant& var : fig.variants) {
      const LifetimeFunction lf = variant_lifetime_function(network, var);
      const UnscheduledStream failures = stream_for(mtbf_of(network, var), econ);
      for (int k = 1; k <= kmax; ++k) {
        const SchedulerResult r = optimal_payments(k, lf, v, L, failures);
        const CostBreakdown b = discounted_breakdown(r, v, failures);
        t.add_row({var.name, as_int(k), b.hardware, b.repairs, b.energy, b.labor, r.npc, r.npc / norm});
      }
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

PipelineResult run_pipeline(const ScenarioDocument& doc) {
  PipelineResult out;
  out.report.scenario = doc.name;
  out.network = build_network_model(doc);
  const NetworkModel& net = out.network;
  const EconomicParams& econ = doc.scenario.econ;
  const LifetimeFunction& lf = *net.lifetime_function;
  const double v = econ.interest_rate;
  const double L = econ.operational_lifetime;
  out.failures = stream_for(net.mtbf_years, econ);

  if (doc.run.schedule) {
    stage("schedule", [&] {
      out.search = optimal_number_of_visits(econ.max_visits, lf, v, L, out.failures);
      out.benchmark_npc = out.search->per_visit_count.front().npc;
      for (double p : out.search->best.payments) out.visit_cap_exceeded |= p > econ.max_visit_expenditure;
      return 0;
    });
  }
  if (doc.run.schedule && doc.run.evl) {
    stage("evl", [&] {
      for (const SchedulerResult& r : out.search->per_visit_count)
        out.evl_curve.push_back(evl_schedule(r.visits, lf, v, L, out.failures));
      out.evl = out.evl_curve[static_cast<std::size_t>(out.search->best.visits - 1)];
      return 0;
    });
  }
  if (doc.run.reliability && !doc.hardware_choices.empty()) {
    stage("reliability", [&] {
      out.reliability = best_choice(doc.hardware_choices, reliability_locations(doc, net), L, v, econ.repair_cost);
      return 0;
    });
  }

  stage("report", [&] {
    Report& rep = out.report;
    Table& summary = rep.add("summary", {"scenario", "mode", "network_power_w", "node_count", "hardware_cost",
                                         "slope_years_per_usd", "first_intercept_years", "later_intercept_years",
                                         "mtbf_years", "failures", "failure_npc", "benchmark_npc",
                                         "optimal_visits", "optimal_npc", "percent_savings", "evl_npc",
                                         "evl_deviation", "kkt_residual", "visit_cap_exceeded", "best_hardware"});
    const std::string none;
    std::vector<Cell> row{doc.name, net.mode, net.network_power, as_int(net.node_count), lf.hardware(1),
                          lf.slope(), lf.intercept(1), lf.intercept(2),
                          std::isinf(net.mtbf_years) ? Cell{std::string("inf")} : Cell{net.mtbf_years},
                          as_int(out.failures.failure_count()), out.failures.present_cost(v)};
    if (out.search) {
      const SchedulerResult& best = out.search->best;
      row.insert(row.end(), {out.benchmark_npc, as_int(best.visits), best.npc,
                             percent_savings(out.benchmark_npc, best.npc)});
    } else {
      row.insert(row.end(), {none, none, none, none});
    }
    if (out.evl) {
      row.insert(row.end(), {out.evl->npc, std::abs(out.evl->npc - out.search->best.npc) / out.search->best.npc});
    } else {
      row.insert(row.end(), {none, none});
    }
    row.push_back(out.search ? Cell{out.search->best.kkt_residual} : Cell{none});
    row.push_back(as_int(out.visit_cap_exceeded));
    row.push_back(out.reliability ? Cell{doc.hardware_choices[out.reliability->best].id} : Cell{none});
    summary.add_row(std::move(row));

    if (out.search) {
      Table& sched = rep.add("schedule", {"method", "visit", "payment", "lifetime_years", "visit_time_years",
                                          "hardware", "energy", "labor", "clamped"});
      add_schedule_rows(sched, out.search->best);
      if (out.evl) add_schedule_rows(sched, *out.evl);

      Table& curve =
          rep.add("npc_by_visits", {"visits", "onpc_npc", "evl_npc", "too_many_visits", "kkt_residual"});
      for (std::size_t i = 0; i < out.search->per_visit_count.size(); ++i) {
        const SchedulerResult& r = out.search->per_visit_count[i];
        curve.add_row({as_int(r.visits), r.npc, out.evl_curve.empty() ? Cell{none} : Cell{out.evl_curve[i].npc},
                       as_int(r.too_many_visits), r.kkt_residual});
      }
      if (!out.search->diagnostics.empty()) {
        Table& diag = rep.add("diagnostics", {"message"});
        for (const std::string& d : out.search->diagnostics) diag.add_row({d});
      }
    }

    if (net.deployment) {
      const Scenario& s = doc.scenario;
      const DeploymentPlan& plan = net.deployment->plan;
      Table& nodes = rep.add("deployment", {"id", "kind", "open", "power_w", "first_visit_energy_j"});
      for (std::size_t i = 0; i < s.locations.size(); ++i)
        nodes.add_row({s.locations[i].id, std::string(to_string(s.locations[i].kind)), as_int(bool(plan.open[i])),
                       plan.node_power[i], net.deployment->node_energy[i]});
      Table& flows = rep.add("flows", {"from", "to", "rate_bps"});
      for (const LinkFlow& f : plan.flows) flows.add_row({s.locations[f.from].id, s.locations[f.to].id, f.rate});
    }

    if (out.reliability) rep.tables.push_back(reliability_table("reliability", doc.hardware_choices, *out.reliability));
    return 0;
  });

  if (doc.run.figures) {
    stage("figures", [&] {
      for (Table& t : figure_tables(doc, net)) out.report.tables.push_back(std::move(t));
      return 0;
    });
  }
  return out;
}

}  // namespace wsnpc

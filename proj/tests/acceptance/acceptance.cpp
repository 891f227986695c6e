// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wsnpc/deployment.hpp"
#include "wsnpc/document.hpp"
#include "wsnpc/npc.hpp"
#include "wsnpc/pipeline.hpp"
#include "wsnpc/reliability.hpp"
#include "wsnpc/scheduler.hpp"

using namespace wsnpc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

template <typename F>
double seconds(F&& f, int repeats = 1) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

ScenarioDocument default_document() {
  return load_document(std::string(WSNPC_SOURCE_DIR) + "/scenarios/default.json");
}

struct Defaults {
  LifetimeFunction lf;
  UnscheduledStream failures;
  double v;
  double L;
  int kmax;
};

Defaults defaults(double labor = 1000.0) {
  ScenarioDocument doc = default_document();
  doc.scenario.econ.labor_costs = {labor};
  const NetworkModel net = build_network_model(doc);
  const EconomicParams& e = doc.scenario.econ;
  return {*net.lifetime_function, {net.mtbf_years, e.repair_cost, e.operational_lifetime}, e.interest_rate,
          e.operational_lifetime, e.max_visits};
}

Outcome benchmark_cost() {
  Outcome o;
  const Defaults d = defaults();
  SchedulerResult r;
  const double t = seconds([&] { r = optimal_payments(1, d.lf, d.v, d.L, d.failures); }, 50);
  const double s_oracle = oracle::npc(r.payments, r.lifetimes, d.v, 1.0, 1000.0, 10.0);
  o.require(rel(r.npc, 47749.0) <= 1e-3, "s = " + fmt("%.3f", r.npc));
  o.require(rel(r.payments[0], 41604.5) <= 1e-3, "p1 = " + fmt("%.3f", r.payments[0]));
  o.require(rel(r.failure_npc, 6144.6) <= 1e-3, "failure NPC = " + fmt("%.3f", r.failure_npc));
  o.require(rel(r.npc, s_oracle) <= 1e-12, "oracle sum = " + fmt("%.6f", s_oracle));
  o.require(t < 1e-3, "runtime " + fmt("%.3g s", t));
  if (o.pass)
    o.detail = "s=" + fmt("%.3f", r.npc) + " p1=" + fmt("%.3f", r.payments[0]) +
               " failures=" + fmt("%.3f", r.failure_npc) + " in " + fmt("%.2g s", t);
  return o;
}

Outcome evl_vs_onpc() {
  Outcome o;
  const Defaults d = defaults();
  double dev = 0.0;
  int kstar = 0;
  const double t = seconds([&] {
    const VisitCountSearch s = optimal_number_of_visits(d.kmax, d.lf, d.v, d.L, d.failures);
    kstar = s.best.visits;
    const SchedulerResult e = evl_schedule(kstar, d.lf, d.v, d.L, d.failures);
    dev = std::abs(e.npc - s.best.npc) / s.best.npc;
  });
  o.require(dev <= 1e-4, "deviation " + fmt("%.3g", dev));
  o.require(t < 1.0, "runtime " + fmt("%.3g s", t));
  if (o.pass) o.detail = "K*=" + std::to_string(kstar) + " deviation=" + fmt("%.3g", dev) + " in " + fmt("%.2g s", t);
  return o;
}

Outcome optimal_visit_count() {
  Outcome o;
  const Defaults high = defaults(1000.0);
  const Defaults low = defaults(140.0);
  VisitCountSearch a, b;
  const double t = seconds([&] { a = optimal_number_of_visits(30, high.lf, high.v, high.L, high.failures); });
  b = optimal_number_of_visits(30, low.lf, low.v, low.L, low.failures);
  o.require(a.best.visits >= 4 && a.best.visits <= 6, "K*(1000) = " + std::to_string(a.best.visits));
  o.require(b.best.visits > a.best.visits, "K*(140) = " + std::to_string(b.best.visits));
  o.require(b.best.npc < a.best.npc, "npc*(140) not below npc*(1000)");
  o.require(t < 5.0, "runtime " + fmt("%.3g s", t));
  if (o.pass)
    o.detail = "K*(1000)=" + std::to_string(a.best.visits) + " npc=" + fmt("%.2f", a.best.npc) +
               ", K*(140)=" + std::to_string(b.best.visits) + " npc=" + fmt("%.2f", b.best.npc) + " in " +
               fmt("%.2g s", t);
  return o;
}

Outcome redundancy_sweep() {
  Outcome o;
  const HardwareChoice base{"node", 10.0, 10e-6, 1};
  const auto choices = redundancy_choices(base, 1, 10);
  const ChoiceRanking r = best_choice(choices, 150, 10.0, 0.1, 1000.0);
  const int g = choices[r.best].redundancy;
  o.require(g >= 6 && g <= 8, "argmin G = " + std::to_string(g));
  for (int gi : {1, 7}) {
    const auto ref = oracle::redundancy_cost(150, 10.0 * gi, 10e-6 / gi, 10.0, 0.1, 1000.0);
    const ChoiceCost& c = r.costs[static_cast<std::size_t>(gi - 1)];
    o.require(rel(c.total, ref.total) <= 1e-9, "G=" + std::to_string(gi) + " differs: " + fmt("%.6f", c.total));
    o.require(c.repair_count == ref.repairs, "G=" + std::to_string(gi) + " repair count");
  }
  if (o.pass)
    o.detail = "argmin G=" + std::to_string(g) + " G1=" + fmt("%.2f", r.costs[0].total) +
               " G7=" + fmt("%.2f", r.costs[6].total);
  return o;
}

Outcome scheduling_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_kkt = 0.0;
  int cases = 0;
  for (int visits : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      const double rate = 500.0 + 9500.0 * u(rng);  // $/yr
      const double m = 1.0 / rate;
      const double b_later = -0.5 * u(rng);
      const double b_first = b_later - 0.5 * u(rng);
      const LifetimeFunction lf = LifetimeFunction::from_intercepts(m, {b_first, b_later});
      const double v = 0.01 + 0.14 * u(rng);
      const double L = 1.0 + 9.0 * u(rng);
      const SchedulerResult r = optimal_payments(visits, lf, v, L);
      const double step = (L / m) / (visits == 2 ? 2000.0 : 300.0);
      const GridOptimum g = grid_oracle_minimize(lf, visits, v, L, step);
      ++cases;
      worst_kkt = std::max(worst_kkt, r.kkt_residual);
      o.require(r.npc <= g.npc + g.cell_variation,
                "K=" + std::to_string(visits) + " case " + std::to_string(i) + " above grid");
      o.require(r.kkt_residual <= 1e-8, "KKT residual " + fmt("%.3g", r.kkt_residual));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " instances, worst KKT residual " + fmt("%.2g", worst_kkt);
  return o;
}

std::vector<std::string> relay_ids(const Scenario& s, const DeploymentPlan& plan) {
  std::vector<std::string> out;
  for (std::size_t i : plan.open_relays(s)) out.push_back(s.locations[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome deployment_oracle() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int routed = 0;
  for (int i = 0; i < 50; ++i) {
    const Scenario s = oracle::random_topology(rng, {.max_relays = 12, .energy_cost_min = 1e-4, .energy_cost_max = 2.0});
    const DeploymentOptimizer opt(s);
    const std::vector<bool> all(s.locations.size(), true);
    const double rho_all = opt.route(all).network_power;
    const double p = s.econ.labor(1) + s.econ.node_cost * s.locations.size() * u(rng) +
                     s.econ.energy_cost * rho_all * kSecondsPerYear * 10.0 * (0.2 + 2.0 * u(rng));
    const VisitLifetime v = opt.maximize(1, p);
    const oracle::SubsetOptimum best = oracle::best_subset(s, p);
    const std::string tag = "topology " + std::to_string(i);
    o.require(v.stats.proven_optimal, tag + " hit the node limit");
    o.require(relay_ids(s, v.plan) == best.relays, tag + " relay set differs");
    if (best.lifetime > 0.0)
      o.require(rel(v.lifetime, best.lifetime) <= 1e-12, tag + " lifetime " + fmt("%.12g", v.lifetime));
    else
      o.require(v.lifetime == 0.0, tag + " lifetime should be 0");

    const auto links = build_links(s);
    for (const std::vector<bool>* open : {&all, &v.plan.open}) {
      const double paths = oracle::rho_by_paths(s, links, *open);
      o.require(rel(opt.route(*open).network_power, paths) <= 1e-12, tag + " routing differs from path oracle");
      ++routed;
    }
  }
  if (o.pass) o.detail = "50 topologies match subset enumeration; " + std::to_string(routed) + " routings match";
  return o;
}

Outcome lifetime_linearity() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::vector<Scenario> cases;
  for (int i = 0; i < 20; ++i) cases.push_back(oracle::random_topology(rng));
  cases.push_back(load_document(std::string(WSNPC_SOURCE_DIR) + "/scenarios/small_field.json").scenario);
  double worst = 0.0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Scenario& s = cases[c];
    const DeploymentOptimizer opt(s);
    const VisitLifetime base = opt.deploy_for_lifetime(s.econ.operational_lifetime);
    const double m = 1.0 / (s.econ.energy_cost * base.plan.network_power * kSecondsPerYear);
    const double threshold = base.plan.hardware_cost + s.econ.labor(1);
    std::vector<double> ps, ts;
    bool same = true;
    for (double f : {0.9, 0.95, 1.0, 1.05, 1.1}) {
      const double p = threshold + f * s.econ.operational_lifetime / m;
      const VisitLifetime v = opt.maximize(1, p);
      same = same && v.plan.open == base.plan.open;
      ps.push_back(p);
      ts.push_back(v.lifetime);
    }
    double pm = 0, tm = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) pm += ps[i] / ps.size(), tm += ts[i] / ts.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) sxy += (ps[i] - pm) * (ts[i] - tm), sxx += (ps[i] - pm) * (ps[i] - pm);
    const double slope = sxy / sxx;
    double resid = rel(slope, m);
    for (std::size_t i = 0; i < ps.size(); ++i) resid = std::max(resid, rel(tm + slope * (ps[i] - pm), ts[i]));
    worst = std::max(worst, resid);
    o.require(same, "deployment " + std::to_string(c) + " changes relay set across samples");
    o.require(resid <= 1e-9, "deployment " + std::to_string(c) + " residual " + fmt("%.3g", resid));
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " deployments, worst residual " + fmt("%.2g", worst);
  return o;
}

Outcome convexity() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failed = 0;
  double worst = -1e300;
  for (int trial = 0; trial < 1000; ++trial) {
    const double rate = 1000.0 + 9000.0 * u(rng);
    const LifetimeFunction lf(1.0 / rate, 2000.0 * u(rng), {1500.0 * u(rng)});
    const double v = 0.01 + 0.09 * u(rng);
    const double L = 1.0 + 9.0 * u(rng);
    const int K = 2 + static_cast<int>(u(rng) * 3.0);
    auto draw = [&] {
      std::vector<double> tail;
      const double share = L * u(rng);
      for (int k = 2; k <= K; ++k) tail.push_back(lf.expenditure_for(k, share / (K - 1) * u(rng)));
      return tail;
    };
    const auto a = draw();
    const auto b = draw();
    std::vector<double> mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
    const double fa = linear_case_objective(a, lf, v, L);
    const double fb = linear_case_objective(b, lf, v, L);
    const double gap = (linear_case_objective(mid, lf, v, L) - 0.5 * (fa + fb)) / std::max(fa, fb);
    worst = std::max(worst, gap);
    if (gap > 1e-9) ++failed;
  }
  o.require(failed == 0, std::to_string(failed) + " of 1000 midpoint checks failed");

  const LifetimeFunction lf = fixture::case_study_lf();
  const std::vector<double> p0{12000, 9000, 8500, 8000};
  const std::size_t n = p0.size();
  const double h = 20.0;
  auto hess = [&](std::size_t i, std::size_t j) {
    auto at = [&](double di, double dj) {
      std::vector<double> p = p0;
      p[i] += di;
      p[j] += dj;
      return npc(p, lf, 0.1);
    };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
  };
  double off = 1e300;
  for (std::size_t i = 0; i + 1 < n; ++i) off = std::min(off, std::abs(hess(i, n - 1)));
  const double diag = std::abs(hess(n - 1, n - 1));
  o.require(off > 0.0 && diag < 1e-6 * off, "Hessian last row: diag " + fmt("%.3g", diag) + " off " + fmt("%.3g", off));
  if (o.pass)
    o.detail = "1000 midpoints ok (worst " + fmt("%.2g", worst) + "), H[K,K]=" + fmt("%.2g", diag) +
               " min|H[i,K]|=" + fmt("%.3g", off);
  return o;
}

Outcome limit_identities() {
  Outcome o;
  const LifetimeFunction lf = fixture::case_study_lf();
  double worst = 0.0;
  for (int K : {2, 3, 5, 8}) {
    const SchedulerResult r = optimal_payments(K, lf, 1e-9, 10.0);
    for (int k = 0; k + 1 < K; ++k) {
      if (r.clamped[k + 1]) continue;
      worst = std::max(worst, std::abs(r.lifetimes[k + 1] - r.lifetimes[k] - lf.intercept(k + 2)));
    }
  }
  o.require(worst <= 1e-6, "T_{k+1} - T_k - b_{k+1} reaches " + fmt("%.3g", worst));

  ScenarioDocument doc = default_document();
  doc.overrides.mtbf_years.reset();
  doc.scenario.econ.failure_rate_per_hour = 0.0;
  const PipelineResult p = run_pipeline(doc);
  const SchedulerResult& best = p.search->best;
  o.require(std::isinf(p.network.mtbf_years), "MTBF not infinite");
  o.require(p.failures.failure_count() == 0 && best.failure_npc == 0.0, "failure sum not empty");
  o.require(best.npc == npc(best.payments, best.lifetimes, 0.1), "npc differs from the visit-only sum");
  if (o.pass) o.detail = "max drift " + fmt("%.2g", worst) + " yr; lambda=0 leaves no failure term";
  return o;
}

Outcome low_return() {
  Outcome o;
  std::string detail;
  for (int which = 0; which < 2; ++which) {
    ScenarioDocument doc = default_document();
    if (which == 0)
      doc.scenario.econ.operational_lifetime = 1.0;
    else
      doc.scenario.econ.interest_rate = 0.01;
    const PipelineResult p = run_pipeline(doc);
    const double savings = percent_savings(p.benchmark_npc, p.search->best.npc);
    const std::string tag = which == 0 ? "L=1" : "v=0.01";
    o.require(savings < 0.05, tag + " savings " + fmt("%.4f", savings));
    detail += (detail.empty() ? "" : ", ") + tag + " savings=" + fmt("%.4f", savings) + " K*=" +
              std::to_string(p.search->best.visits);
  }
  if (o.pass) o.detail = detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"benchmark cost", benchmark_cost},
      {"EVL vs ONPC", evl_vs_onpc},
      {"optimal visit count", optimal_visit_count},
      {"redundancy sweep", redundancy_sweep},
      {"scheduling oracle", scheduling_oracle},
      {"deployment oracle", deployment_oracle},
      {"lifetime linearity", lifetime_linearity},
      {"convexity", convexity},
      {"limit identities", limit_identities},
      {"low-return regimes", low_return},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %-20s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}

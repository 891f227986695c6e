#include "wsnpc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wsnpc/error.hpp"

namespace wsnpc {
namespace {

constexpr double kBisectTolerance = 1e-7;
constexpr double kPolishTolerance = 1e-12;
constexpr int kMaxIterations = 200;

// Visits 2..K generated from p_2 through the recursion.
struct Trial {
  std::vector<double> payments;
  std::vector<double> lifetimes;
  std::vector<bool> clamped;
  double later = 0.0;  // sum of T_2..T_K
  bool overshoot = false;
};

Trial propagate(double p2, int visits, const LifetimeFunction& lf, double v, double horizon) {
  Trial t;
  double p = p2;
  for (int k = 2; k <= visits; ++k) {
    bool clamped = false;
    if (k > 2) {
      const double q = recursion_term(p, k - 1, lf, v);
      clamped = !(q > lf.threshold(k));
      p = clamped ? lf.threshold(k) : q;
    } else {
      clamped = !(p > lf.threshold(k));
    }
    const double life = clamped ? 0.0 : lf.linear(k, p);
    t.payments.push_back(p);
    t.lifetimes.push_back(life);
    t.clamped.push_back(clamped);
    t.later += life;
    if (t.later > horizon) {
      t.overshoot = true;
      return t;
    }
  }
  return t;
}

// r(p_2) = p_2 - q(p_1(p_2)). Increasing in p_2. Once the later visits alone
// exceed the horizon, T_1 is pinned at 0, which keeps r continuous.
double residual(double p2, int visits, const LifetimeFunction& lf, double v, double horizon) {
  const Trial t = propagate(p2, visits, lf, v, horizon);
  if (t.overshoot) return p2;
  const double ln = std::log1p(v);
  return p2 - std::expm1((horizon - t.later) * ln) / (lf.slope() * ln);
}

SchedulerResult finish(Method method, std::vector<double> payments, std::vector<double> lifetimes,
                       std::vector<bool> clamped, const LifetimeFunction& lf, double v,
                       const UnscheduledStream& failures) {
  SchedulerResult r;
  r.method = method;
  r.visits = static_cast<int>(payments.size());
  r.payments = std::move(payments);
  r.lifetimes = std::move(lifetimes);
  r.clamped = std::move(clamped);
  r.too_many_visits = std::find(r.clamped.begin(), r.clamped.end(), true) != r.clamped.end();
  r.visit_times.assign(r.lifetimes.size(), 0.0);
  for (std::size_t k = 1; k < r.lifetimes.size(); ++k) r.visit_times[k] = r.visit_times[k - 1] + r.lifetimes[k - 1];
  for (std::size_t k = 0; k < r.payments.size(); ++k) {
    const int visit = static_cast<int>(k + 1);
    VisitCost c;
    c.hardware = lf.hardware(visit);
    c.labor = lf.labor(visit);
    c.energy = std::max(0.0, r.payments[k] - c.hardware - c.labor);
    r.costs.push_back(c);
  }
  for (std::size_t k = 0; k + 1 < r.payments.size(); ++k) {
    const double expected = next_payment(r.payments[k], static_cast<int>(k + 1), lf, v);
    const double gap = std::abs(r.payments[k + 1] - expected) / std::max(1.0, std::abs(r.payments[k + 1]));
    r.kkt_residual = std::max(r.kkt_residual, gap);
  }
  r.maintenance_npc = npc(r.payments, r.lifetimes, v);
  r.failure_npc = failures.present_cost(v);
  r.npc = r.maintenance_npc + r.failure_npc;
  return r;
}

void check_inputs(int visits, double v, double horizon) {
  if (visits < 1) throw ValidationError("number of visits must be >= 1");
  if (!(v > 0.0)) throw ValidationError("interest_rate must be > 0");
  if (!(horizon > 0.0)) throw ValidationError("operational_lifetime must be > 0");
}

SchedulerResult single_visit(const LifetimeFunction& lf, double v, double horizon,
                             const UnscheduledStream& failures) {
  return finish(Method::kOnpc, {lf.expenditure_for(1, horizon)}, {horizon}, {false}, lf, v, failures);
}

}  // namespace

double recursion_term(double p_k, int k, const LifetimeFunction& lf, double interest_rate) {
  const double ln = std::log1p(interest_rate);
  return std::expm1(lf.linear(k, p_k) * ln) / (lf.slope() * ln);
}

double next_payment(double p_k, int k, const LifetimeFunction& lf, double interest_rate) {
  const double q = recursion_term(p_k, k, lf, interest_rate);
  const double floor = lf.threshold(k + 1);
  return q > floor ? q : floor;
}

const char* to_string(Method method) { return method == Method::kOnpc ? "ONPC" : "EVL"; }

CostBreakdown discounted_breakdown(const SchedulerResult& result, double interest_rate,
                                   const UnscheduledStream& failures) {
  CostBreakdown b;
  for (std::size_t k = 0; k < result.costs.size(); ++k) {
    const double d = discount(interest_rate, result.visit_times[k]);
    b.hardware += result.costs[k].hardware * d;
    b.energy += result.costs[k].energy * d;
    b.labor += result.costs[k].labor * d;
  }
  b.repairs = failures.present_cost(interest_rate);
  return b;
}

SchedulerResult optimal_payments(int visits, const LifetimeFunction& lf, double interest_rate, double horizon,
                                 const UnscheduledStream& failures) {
  check_inputs(visits, interest_rate, horizon);
  if (visits == 1) return single_visit(lf, interest_rate, horizon, failures);

  auto r = [&](double p2) { return residual(p2, visits, lf, interest_rate, horizon); };
  double lo = lf.threshold(2);
  double hi = lf.expenditure_for(2, horizon);
  double flo = r(lo);
  double fhi = r(hi);
  std::size_t iterations = 2;

  double root = lo;
  if (flo < 0.0) {
    if (!(fhi > 0.0) || !std::isfinite(flo) || !std::isfinite(fhi))
      throw SolverFailure("no sign change for the stationarity residual on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    while (hi - lo > kBisectTolerance * hi && iterations < kMaxIterations) {
      const double mid = 0.5 * (lo + hi);
      const double fm = r(mid);
      ++iterations;
      if (fm < 0.0) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
        fhi = fm;
      }
    }
    // Illinois-style secant inside the bracket.
    int side = 0;
    root = std::abs(flo) < std::abs(fhi) ? lo : hi;
    for (int it = 0; it < kMaxIterations && hi - lo > kPolishTolerance * hi; ++it) {
      double x = (lo * fhi - hi * flo) / (fhi - flo);
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
      const double fx = r(x);
      ++iterations;
      root = x;
      if (fx == 0.0) break;
      if (fx < 0.0) {
        lo = x;
        flo = fx;
        if (side == -1) fhi *= 0.5;
        side = -1;
      } else {
        hi = x;
        fhi = fx;
        if (side == 1) flo *= 0.5;
        side = 1;
      }
    }
  }
  // flo >= 0 at the threshold: even a zero-lifetime second visit is too
  // expensive, so every later visit sits on its threshold.

  Trial t = propagate(root, visits, lf, interest_rate, horizon);
  if (t.overshoot) throw SolverFailure("stationary schedule overshoots the horizon");
  std::vector<double> payments{lf.expenditure_for(1, horizon - t.later)};
  std::vector<double> lifetimes{horizon - t.later};
  std::vector<bool> clamped{false};
  payments.insert(payments.end(), t.payments.begin(), t.payments.end());
  lifetimes.insert(lifetimes.end(), t.lifetimes.begin(), t.lifetimes.end());
  clamped.insert(clamped.end(), t.clamped.begin(), t.clamped.end());
  SchedulerResult result =
      finish(Method::kOnpc, std::move(payments), std::move(lifetimes), std::move(clamped), lf, interest_rate, failures);
  result.iterations = iterations;
  return result;
}

VisitCountSearch optimal_number_of_visits(int max_visits, const LifetimeFunction& lf, double interest_rate,
                                          double horizon, const UnscheduledStream& failures) {
  check_inputs(max_visits, interest_rate, horizon);
  VisitCountSearch search;
  bool have_best = false;
  for (int k = 1; k <= max_visits; ++k) {
    try {
      SchedulerResult r = optimal_payments(k, lf, interest_rate, horizon, failures);
      if (!have_best || r.npc < search.best.npc) {
        search.best = r;
        have_best = true;
      }
      search.per_visit_count.push_back(std::move(r));
    } catch (const SolverFailure& e) {
      search.diagnostics.push_back("K=" + std::to_string(k) + " skipped: " + e.what());
    }
  }
  if (!have_best) throw SolverFailure("no visit count in 1.." + std::to_string(max_visits) + " could be solved");
  return search;
}

SchedulerResult evl_schedule(int visits, const LifetimeFunction& lf, double interest_rate, double horizon,
                             const UnscheduledStream& failures) {
  check_inputs(visits, interest_rate, horizon);
  const double each = horizon / visits;
  std::vector<double> payments;
  for (int k = 1; k <= visits; ++k) payments.push_back(lf.expenditure_for(k, each));
  return finish(Method::kEvl, std::move(payments), std::vector<double>(static_cast<std::size_t>(visits), each),
                std::vector<bool>(static_cast<std::size_t>(visits), false), lf, interest_rate, failures);
}

}  // namespace wsnpc

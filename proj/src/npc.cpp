#include "wsnpc/npc.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "wsnpc/error.hpp"

namespace wsnpc {
namespace {

// Lifetimes computed as m p + b at a threshold land within rounding of zero.
constexpr double kLifetimeSlack = 1e-12;

double checked_lifetime(double t, std::size_t k) {
  if (t < 0.0 && t > -kLifetimeSlack) return 0.0;
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ScheduleInfeasible("visit " + std::to_string(k + 1) + " has lifetime " + std::to_string(t) +
                             " yr; the discount exponent must be finite and >= 0");
  return t;
}

}  // namespace

long long UnscheduledStream::failure_count() const {
  if (!(mtbf > 0.0)) throw ValidationError("mtbf must be > 0");
  if (std::isinf(mtbf)) return 0;
  return guarded_floor(horizon / mtbf);
}

std::vector<double> UnscheduledStream::failure_times() const {
  std::vector<double> times;
  const long long count = failure_count();
  times.reserve(static_cast<std::size_t>(count));
  for (long long n = 1; n <= count; ++n) times.push_back(static_cast<double>(n) * mtbf);
  return times;
}

double UnscheduledStream::present_cost(double interest_rate) const {
  double total = 0.0;
  for (double t : failure_times()) total += repair_cost * discount(interest_rate, t);
  return total;
}

PaymentSchedule PaymentSchedule::from_payments(std::vector<double> payments, const LifetimeFunction& lf) {
  PaymentSchedule s;
  s.lifetimes.reserve(payments.size());
  for (std::size_t k = 0; k < payments.size(); ++k)
    s.lifetimes.push_back(lf.lifetime(static_cast<int>(k + 1), payments[k]));
  s.payments = std::move(payments);
  return s;
}

std::vector<double> PaymentSchedule::visit_times() const {
  std::vector<double> times(lifetimes.size(), 0.0);
  for (std::size_t k = 1; k < lifetimes.size(); ++k) times[k] = times[k - 1] + lifetimes[k - 1];
  return times;
}

std::vector<bool> PaymentSchedule::active() const {
  std::vector<bool> a(payments.size());
  for (std::size_t k = 0; k < payments.size(); ++k) a[k] = payments[k] > 0.0;
  return a;
}

double PaymentSchedule::total_lifetime() const {
  double total = 0.0;
  for (double t : lifetimes) total += t;
  return total;
}

double discount(double interest_rate, double years) { return std::exp(-years * std::log1p(interest_rate)); }

double npc(const PaymentSchedule& schedule, double interest_rate, const UnscheduledStream& failures) {
  return npc(schedule.payments, schedule.lifetimes, interest_rate, failures);
}

double npc(const std::vector<double>& payments, const std::vector<double>& lifetimes, double interest_rate,
           const UnscheduledStream& failures) {
  if (payments.empty()) throw ValidationError("schedule needs at least one visit");
  if (payments.size() != lifetimes.size()) throw ValidationError("payments and lifetimes differ in length");
  if (!(interest_rate > -1.0)) throw ValidationError("interest_rate must be > -1");
  double total = 0.0;
  double t = 0.0;
  for (std::size_t k = 0; k < payments.size(); ++k) {
    if (!(payments[k] >= 0.0) || !std::isfinite(payments[k]))
      throw ScheduleInfeasible("visit " + std::to_string(k + 1) + " expenditure must be finite and >= 0");
    total += payments[k] * discount(interest_rate, t);
    t += checked_lifetime(lifetimes[k], k);
  }
  return total + failures.present_cost(interest_rate);
}

double npc(const std::vector<double>& payments, const LifetimeFunction& lf, double interest_rate,
           const UnscheduledStream& failures) {
  return npc(PaymentSchedule::from_payments(payments, lf), interest_rate, failures);
}

double percent_savings(double single_visit_npc, double optimized_npc) {
  if (!(single_visit_npc > 0.0)) throw ValidationError("benchmark NPC must be > 0");
  return std::abs(single_visit_npc - optimized_npc) / single_visit_npc;
}

double eliminated_first_payment(const std::vector<double>& tail, const LifetimeFunction& lf, double horizon) {
  double later = 0.0;
  for (std::size_t i = 0; i < tail.size(); ++i) later += lf.linear(static_cast<int>(i + 2), tail[i]);
  return (horizon - later - lf.intercept(1)) / lf.slope();
}

double linear_case_objective(const std::vector<double>& tail, const LifetimeFunction& lf, double interest_rate,
                             double horizon, const UnscheduledStream& failures) {
  std::vector<double> payments{eliminated_first_payment(tail, lf, horizon)};
  payments.insert(payments.end(), tail.begin(), tail.end());
  std::vector<double> lifetimes(payments.size());
  double later = 0.0;
  for (std::size_t k = 1; k < payments.size(); ++k) {
    lifetimes[k] = lf.linear(static_cast<int>(k + 1), payments[k]);
    later += lifetimes[k];
  }
  lifetimes[0] = horizon - later;
  return npc(payments, lifetimes, interest_rate, failures);
}

GridOptimum grid_oracle_minimize(const LifetimeFunction& lf, int visits, double interest_rate, double horizon,
                                 double step, const UnscheduledStream& failures, const std::vector<double>& anchor) {
  if (visits != 2 && visits != 3) throw ValidationError("grid oracle supports 2 or 3 visits");
  if (!(step > 0.0)) throw ValidationError("grid step must be > 0");
  if (!anchor.empty() && anchor.size() != static_cast<std::size_t>(visits - 1))
    throw ValidationError("grid anchor needs one entry per later visit");

  const std::size_t dims = static_cast<std::size_t>(visits - 1);
  std::vector<std::vector<double>> axes(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const int k = static_cast<int>(d + 2);
    const double lo = lf.threshold(k);
    const double hi = lf.expenditure_for(k, horizon);
    double start = lo;
    if (!anchor.empty()) start = anchor[d] + std::ceil((lo - anchor[d]) / step) * step;
    for (double p = start; p <= hi; p += step) axes[d].push_back(p);
  }
  const std::size_t n2 = axes[0].size();
  const std::size_t n3 = dims == 2 ? axes[1].size() : 1;

  std::vector<double> values(n2 * n3, kInfinity);
  GridOptimum best;
  best.npc = kInfinity;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n3; ++j) {
      std::vector<double> tail{axes[0][i]};
      if (dims == 2) tail.push_back(axes[1][j]);
      double later = 0.0;
      for (std::size_t d = 0; d < dims; ++d) later += std::max(0.0, lf.linear(static_cast<int>(d + 2), tail[d]));
      if (later > horizon) continue;
      const double value = linear_case_objective(tail, lf, interest_rate, horizon, failures);
      values[i * n3 + j] = value;
      ++best.evaluated;
      if (value < best.npc) {
        best.npc = value;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best.evaluated == 0) throw ScheduleInfeasible("grid contains no schedule reaching the horizon");

  std::vector<double> tail{axes[0][best_i]};
  if (dims == 2) tail.push_back(axes[1][best_j]);
  best.payments = {eliminated_first_payment(tail, lf, horizon)};
  best.payments.insert(best.payments.end(), tail.begin(), tail.end());

  auto probe = [&](long long i, long long j) {
    if (i < 0 || j < 0 || i >= static_cast<long long>(n2) || j >= static_cast<long long>(n3)) return;
    const double v = values[static_cast<std::size_t>(i) * n3 + static_cast<std::size_t>(j)];
    if (std::isfinite(v)) best.cell_variation = std::max(best.cell_variation, std::abs(v - best.npc));
  };
  const auto bi = static_cast<long long>(best_i);
  const auto bj = static_cast<long long>(best_j);
  for (long long di = -1; di <= 1; ++di)
    for (long long dj = -1; dj <= 1; ++dj) probe(bi + di, bj + dj);
  return best;
}

}  // namespace wsnpc

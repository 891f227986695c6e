#pragma once

#include <cstddef>
#include <vector>

#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {

/// Deterministic stream of unscheduled repairs at t_n = n * mtbf, n = 1..F,
/// with F = floor(horizon / mtbf).
struct UnscheduledStream {
  double mtbf = kInfinity;   // years
  double repair_cost = 0.0;  // $ per repair
  double horizon = 0.0;      // years

  long long failure_count() const;
  std::vector<double> failure_times() const;
  double present_cost(double interest_rate) const;
};

/// Visit expenditures with the lifetimes they buy.
struct PaymentSchedule {
  std::vector<double> payments;   // $
  std::vector<double> lifetimes;  // years

  static PaymentSchedule from_payments(std::vector<double> payments, const LifetimeFunction& lf);

  std::size_t visits() const { return payments.size(); }
  /// Start time of each visit: 0, T_1, T_1 + T_2, ...
  std::vector<double> visit_times() const;
  /// a_k = 1 when p_k > 0.
  std::vector<bool> active() const;
  double total_lifetime() const;
};

double discount(double interest_rate, double years);

/// Present cost of the visits plus the repair stream. Throws
/// ScheduleInfeasible on negative or non-finite payments or lifetimes.
double npc(const PaymentSchedule& schedule, double interest_rate, const UnscheduledStream& failures = {});
double npc(const std::vector<double>& payments, const std::vector<double>& lifetimes, double interest_rate,
           const UnscheduledStream& failures = {});
/// Lifetimes taken from `lf`; no horizon constraint is imposed.
double npc(const std::vector<double>& payments, const LifetimeFunction& lf, double interest_rate,
           const UnscheduledStream& failures = {});

/// |s - optimized| / s.
double percent_savings(double single_visit_npc, double optimized_npc);

/// p_1 that makes the total lifetime `horizon` given p_2..p_K on the linear branch.
double eliminated_first_payment(const std::vector<double>& tail, const LifetimeFunction& lf, double horizon);

/// NPC of the fixed-K linear problem as a function of p_2..p_K, with p_1
/// eliminated through the horizon constraint. Every T_k is taken as m p_k + b_k.
double linear_case_objective(const std::vector<double>& tail, const LifetimeFunction& lf, double interest_rate,
                             double horizon, const UnscheduledStream& failures = {});

struct GridOptimum {
  std::vector<double> payments;  // p_1..p_K
  double npc = 0.0;
  /// Largest objective change between the optimum and a neighbouring grid point.
  double cell_variation = 0.0;
  std::size_t evaluated = 0;
};

/// Exhaustive search of p_2..p_K on a grid. The grid in coordinate k runs
/// from the visit threshold upward in `step` increments, shifted so that
/// `anchor[k-2]` lies on it when an anchor is given. Only K = 2 and K = 3
/// are accepted.
GridOptimum grid_oracle_minimize(const LifetimeFunction& lf, int visits, double interest_rate, double horizon,
                                 double step, const UnscheduledStream& failures = {},
                                 const std::vector<double>& anchor = {});

}  // namespace wsnpc

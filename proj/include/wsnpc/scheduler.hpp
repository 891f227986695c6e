#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/npc.hpp"

namespace wsnpc {

/// q(p_k) = ((1+v)^(m p_k + b_k) - 1) / (m ln(1+v)), the stationary next
/// expenditure before the threshold clamp.
double recursion_term(double p_k, int k, const LifetimeFunction& lf, double interest_rate);

/// q(p_k), or the threshold of visit k+1 when q falls at or below it.
double next_payment(double p_k, int k, const LifetimeFunction& lf, double interest_rate);

enum class Method { kOnpc, kEvl };

const char* to_string(Method method);

struct VisitCost {
  double hardware = 0.0;
  double energy = 0.0;
  double labor = 0.0;
};

struct SchedulerResult {
  int visits = 0;
  Method method = Method::kOnpc;
  std::vector<double> payments;     // $
  std::vector<double> lifetimes;    // years
  std::vector<double> visit_times;  // years
  std::vector<bool> clamped;        // visit held at its zero-lifetime threshold
  std::vector<VisitCost> costs;     // undiscounted split of each payment
  double npc = 0.0;
  double maintenance_npc = 0.0;  // visits only
  double failure_npc = 0.0;      // unscheduled repairs only
  bool too_many_visits = false;
  /// Largest relative gap |p_{k+1} - next_payment(p_k)| over consecutive visits.
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
};

/// Discounted hardware / energy / labor totals of a schedule.
struct CostBreakdown {
  double hardware = 0.0;
  double energy = 0.0;
  double labor = 0.0;
  double repairs = 0.0;
};

CostBreakdown discounted_breakdown(const SchedulerResult& result, double interest_rate,
                                   const UnscheduledStream& failures = {});

/// Minimum-NPC expenditures for exactly `visits` visits on a linear lifetime function.
SchedulerResult optimal_payments(int visits, const LifetimeFunction& lf, double interest_rate, double horizon,
                                 const UnscheduledStream& failures = {});

struct VisitCountSearch {
  SchedulerResult best;
  std::vector<SchedulerResult> per_visit_count;  // ascending K; a K that failed is absent
  std::vector<std::string> diagnostics;
};

/// Tries every K in 1..max_visits and keeps the cheapest, ties toward smaller K.
VisitCountSearch optimal_number_of_visits(int max_visits, const LifetimeFunction& lf, double interest_rate,
                                          double horizon, const UnscheduledStream& failures = {});

/// Equal lifetimes L/K.
SchedulerResult evl_schedule(int visits, const LifetimeFunction& lf, double interest_rate, double horizon,
                             const UnscheduledStream& failures = {});

}  // namespace wsnpc

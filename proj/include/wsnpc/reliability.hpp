#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wsnpc {

/// Hardware installed at every location: a grade, or G redundant copies of a base node.
struct HardwareChoice {
  std::string id;
  double cost = 0.0;                   // $ per location
  double failure_rate_per_hour = 0.0;  // per location
  int redundancy = 1;
};

struct ChoiceCost {
  double total = 0.0;
  double hardware = 0.0;  // N c_i
  double repairs = 0.0;   // discounted (R + c_i) per failure
  long long repair_count = 0;
};

/// N c_i plus (R + c_i) discounted at every t_n = n / (N lambda_i), n up to floor(L N lambda_i).
ChoiceCost choice_cost(const HardwareChoice& choice, std::size_t locations, double horizon, double interest_rate,
                       double repair_cost);

struct ChoiceRanking {
  std::size_t best = 0;  // index into the input choices
  std::vector<ChoiceCost> costs;
};

/// Cheapest choice; ties go to the lower per-location cost, then the lower id.
ChoiceRanking best_choice(const std::vector<HardwareChoice>& choices, std::size_t locations, double horizon,
                          double interest_rate, double repair_cost);

/// G copies of `base` for G in [g_min, g_max]: cost G c, failure rate lambda / G.
std::vector<HardwareChoice> redundancy_choices(const HardwareChoice& base, int g_min, int g_max);

}  // namespace wsnpc

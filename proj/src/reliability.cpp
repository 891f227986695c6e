#include "wsnpc/reliability.hpp"

#include <cmath>

#include "wsnpc/error.hpp"
#include "wsnpc/npc.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {

ChoiceCost choice_cost(const HardwareChoice& choice, std::size_t locations, double horizon, double interest_rate,
                       double repair_cost) {
  if (locations == 0) throw ValidationError("hardware choice needs at least one location");
  if (!(choice.cost >= 0.0)) throw ValidationError("hardware choice '" + choice.id + "' cost must be >= 0");
  if (!(choice.failure_rate_per_hour >= 0.0))
    throw ValidationError("hardware choice '" + choice.id + "' failure rate must be >= 0");
  if (!(horizon > 0.0)) throw ValidationError("operational_lifetime must be > 0");
  if (!(interest_rate > 0.0)) throw ValidationError("interest_rate must be > 0");

  const double n = static_cast<double>(locations);
  ChoiceCost out;
  out.hardware = n * choice.cost;
  const double network_rate = n * per_hour_to_per_year(choice.failure_rate_per_hour);  // failures per year
  out.repair_count = guarded_floor(horizon * network_rate);
  for (long long i = 1; i <= out.repair_count; ++i)
    out.repairs += (repair_cost + choice.cost) * discount(interest_rate, static_cast<double>(i) / network_rate);
  out.total = out.hardware + out.repairs;
  return out;
}

ChoiceRanking best_choice(const std::vector<HardwareChoice>& choices, std::size_t locations, double horizon,
                          double interest_rate, double repair_cost) {
  if (choices.empty()) throw ValidationError("hardware_choices must be non-empty");
  ChoiceRanking ranking;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    ranking.costs.push_back(choice_cost(choices[i], locations, horizon, interest_rate, repair_cost));
    const ChoiceCost& c = ranking.costs[i];
    const ChoiceCost& b = ranking.costs[ranking.best];
    if (i == 0 || c.total < b.total) {
      ranking.best = i;
    } else if (c.total == b.total) {
      const HardwareChoice& cur = choices[ranking.best];
      if (choices[i].cost < cur.cost || (choices[i].cost == cur.cost && choices[i].id < cur.id)) ranking.best = i;
    }
  }
  return ranking;
}

std::vector<HardwareChoice> redundancy_choices(const HardwareChoice& base, int g_min, int g_max) {
  if (g_min < 1 || g_max < g_min) throw ValidationError("redundancy range must satisfy 1 <= min <= max");
  std::vector<HardwareChoice> out;
  for (int g = g_min; g <= g_max; ++g) {
    HardwareChoice c;
    c.id = base.id + "-x" + std::to_string(g);
    c.cost = base.cost * g;
    c.failure_rate_per_hour = base.failure_rate_per_hour / g;
    c.redundancy = g * base.redundancy;
    out.push_back(c);
  }
  return out;
}

}  // namespace wsnpc

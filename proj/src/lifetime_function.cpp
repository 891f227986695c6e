#include "wsnpc/lifetime_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wsnpc/error.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {

LifetimeFunction::LifetimeFunction(double slope, double hardware_cost, std::vector<double> labor_costs)
    : slope_(slope), hardware_cost_(hardware_cost), labor_costs_(std::move(labor_costs)) {
  if (!(slope_ > 0.0) || !std::isfinite(slope_))
    throw DegenerateNetwork("lifetime slope must be finite and > 0");
  if (!(hardware_cost_ >= 0.0)) throw ValidationError("hardware cost must be >= 0");
  if (labor_costs_.empty()) labor_costs_.push_back(0.0);
  for (double w : labor_costs_)
    if (!(w >= 0.0)) throw ValidationError("labor costs must be >= 0");
}

LifetimeFunction LifetimeFunction::from_intercepts(double slope, const std::vector<double>& intercepts) {
  std::vector<double> fixed;
  fixed.reserve(intercepts.size());
  for (double b : intercepts) {
    if (b > 0.0) throw ValidationError("lifetime intercepts must be <= 0");
    fixed.push_back(-b / slope);
  }
  return LifetimeFunction(slope, 0.0, std::move(fixed));
}

LifetimeFunction LifetimeFunction::from_energy_rate(double energy_cost, double network_power,
                                                    double hardware_cost, std::vector<double> labor_costs) {
  const double dollars_per_year = energy_cost * network_power * kSecondsPerYear;
  if (!(dollars_per_year > 0.0) || !std::isfinite(dollars_per_year))
    throw DegenerateNetwork("energy payment rate must be > 0 (network power " +
                            std::to_string(network_power) + " W)");
  return LifetimeFunction(1.0 / dollars_per_year, hardware_cost, std::move(labor_costs));
}

double LifetimeFunction::labor(int k) const {
  const auto idx = static_cast<std::size_t>(std::max(k, 1) - 1);
  return labor_costs_[std::min(idx, labor_costs_.size() - 1)];
}

double LifetimeFunction::lifetime(int k, double expenditure) const {
  return expenditure > threshold(k) ? linear(k, expenditure) : 0.0;
}

}  // namespace wsnpc

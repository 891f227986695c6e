#pragma once

#include <vector>

namespace wsnpc {

/// Piecewise-linear map from a visit expenditure ($) to the visit lifetime
/// (years) it buys: zero up to the visit's fixed cost, then slope m.
///
/// Visit 1 carries the hardware purchase and its labor; later visits carry
/// labor only. Labor entries past the end of the vector repeat the last one.
class LifetimeFunction {
 public:
  LifetimeFunction(double slope, double hardware_cost, std::vector<double> labor_costs);

  /// Build from raw intercepts b_1..b_n (years, all <= 0). The fixed cost
  /// of every visit is booked as labor.
  static LifetimeFunction from_intercepts(double slope, const std::vector<double>& intercepts);

  /// Slope 1/(energy_cost * network_power), converted to years per dollar.
  static LifetimeFunction from_energy_rate(double energy_cost, double network_power,
                                           double hardware_cost, std::vector<double> labor_costs);

  double slope() const { return slope_; }
  double intercept(int k) const { return -fixed_cost(k) * slope_; }
  /// Expenditure at which visit k starts buying lifetime, i.e. -b_k/m.
  double threshold(int k) const { return fixed_cost(k); }
  double fixed_cost(int k) const { return hardware(k) + labor(k); }
  double hardware(int k) const { return k == 1 ? hardware_cost_ : 0.0; }
  double labor(int k) const;
  const std::vector<double>& labor_costs() const { return labor_costs_; }

  /// m p + b_k without the zero floor.
  double linear(int k, double expenditure) const { return slope_ * expenditure + intercept(k); }
  double lifetime(int k, double expenditure) const;
  /// Expenditure whose lifetime is `years`.
  double expenditure_for(int k, double years) const { return (years - intercept(k)) / slope_; }

  bool operator==(const LifetimeFunction&) const = default;

 private:
  double slope_;
  double hardware_cost_;
  std::vector<double> labor_costs_;
};

}  // namespace wsnpc

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsnpc/lifetime_function.hpp"
#include "wsnpc/reliability.hpp"
#include "wsnpc/scenario.hpp"

namespace wsnpc {

/// Values that bypass parts of the model.
struct Overrides {
  std::optional<double> network_power;     // W, replaces topology routing
  std::optional<std::size_t> node_count;   // replaces the plan's node count
  std::optional<double> mtbf_years;        // replaces 1 / (N lambda)
};

struct RunOptions {
  bool lifetime = true;
  bool schedule = true;
  bool evl = true;
  bool reliability = true;
  bool figures = false;
};

/// One parameter change applied on top of the base scenario.
struct ScenarioVariant {
  std::string name;
  std::optional<double> node_cost;
  std::optional<double> labor_cost;
  std::optional<double> mtbf_years;
};

struct FigureOptions {
  std::vector<double> labor_sweep{1000.0, 500.0, 140.0};
  double reference_labor_cost = 1000.0;
  double phi_min = 1e-6;  // $/s
  double phi_max = 3e-4;
  int phi_steps = 30;
  int redundancy_min = 1;
  int redundancy_max = 10;
  std::vector<ScenarioVariant> variants;
};

struct ScenarioDocument {
  std::string name;
  Scenario scenario;
  std::vector<HardwareChoice> hardware_choices;
  /// Set when the reliability sweep uses N from outside the deployment.
  std::optional<std::size_t> reliability_locations;
  RunOptions run;
  Overrides overrides;
  std::optional<LifetimeFunction> lifetime_function;
  FigureOptions figures;

  bool has_topology() const { return !scenario.locations.empty(); }
};

/// Parse a scenario document. Throws SchemaError naming the JSON path of
/// the first offending value.
ScenarioDocument parse_document(std::string_view text);
ScenarioDocument load_document(const std::string& path);

/// Built-in variants: default, c = $100, labor = $140, MTBF = 1 month.
std::vector<ScenarioVariant> default_variants();

}  // namespace wsnpc

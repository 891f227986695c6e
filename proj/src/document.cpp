#include "wsnpc/document.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "wsnpc/error.hpp"
#include "wsnpc/radio.hpp"
#include "wsnpc/units.hpp"

namespace wsnpc {
namespace {

using nlohmann::json;

// A JSON value together with its location, for error messages.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SchemaError((path_.empty() ? "/" : path_) + ": " + message);
  }

  void expect_object(std::initializer_list<const char*> allowed) const {
    if (!value_.is_object()) fail("expected an object");
    for (auto it = value_.begin(); it != value_.end(); ++it) {
      bool known = false;
      for (const char* key : allowed) known = known || it.key() == key;
      if (!known) Node(it.value(), path_ + "/" + it.key()).fail("unknown key");
    }
  }

  bool has(const char* key) const { return value_.contains(key); }
  Node operator[](const char* key) const {
    if (!value_.contains(key)) Node(value_, path_ + "/" + key).fail("required key missing");
    return Node(value_.at(key), path_ + "/" + key);
  }
  Node operator[](std::size_t i) const { return Node(value_.at(i), path_ + "/" + std::to_string(i)); }

  std::size_t array_size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  double number() const {
    if (!value_.is_number()) fail("expected a number");
    return value_.get<double>();
  }
  double positive() const {
    const double v = number();
    if (!(v > 0.0)) fail("expected a number > 0");
    return v;
  }
  double non_negative() const {
    const double v = number();
    if (!(v >= 0.0)) fail("expected a number >= 0");
    return v;
  }
  long long integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    return value_.get<long long>();
  }
  std::size_t count() const {
    const long long v = integer();
    if (v < 0) fail("expected an integer >= 0");
    return static_cast<std::size_t>(v);
  }
  bool boolean() const {
    if (!value_.is_boolean()) fail("expected true or false");
    return value_.get<bool>();
  }
  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }
  std::vector<double> numbers() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < array_size(); ++i) out.push_back((*this)[i].number());
    return out;
  }

 private:
  const json& value_;
  std::string path_;
};

template <typename T, typename F>
void maybe(const Node& n, const char* key, T& target, F read) {
  if (n.has(key)) target = read(n[key]);
}

LocationKind parse_kind(const Node& n) {
  const std::string s = n.string();
  if (s == "sensor") return LocationKind::kSensor;
  if (s == "sink") return LocationKind::kSink;
  if (s == "candidate-relay") return LocationKind::kCandidateRelay;
  n.fail("expected one of sensor, sink, candidate-relay");
}

Location parse_location(const Node& n) {
  n.expect_object({"id", "kind", "x", "y", "data_rate", "sense_energy"});
  Location loc;
  loc.id = n["id"].string();
  loc.kind = parse_kind(n["kind"]);
  loc.position = {n["x"].number(), n["y"].number()};
  maybe(n, "data_rate", loc.data_rate, [](const Node& v) { return v.non_negative(); });
  maybe(n, "sense_energy", loc.sense_energy, [](const Node& v) { return v.non_negative(); });
  return loc;
}

double power_field(const Node& n, const char* watts_key, const char* dbm_key) {
  if (n.has(watts_key) && n.has(dbm_key)) n.fail(std::string("give only one of ") + watts_key + " and " + dbm_key);
  if (n.has(watts_key)) return n[watts_key].positive();
  if (n.has(dbm_key)) return dbm_to_watts(n[dbm_key].number());
  n.fail(std::string("one of ") + watts_key + " or " + dbm_key + " is required");
}

RadioModel parse_radio(const Node& n) {
  n.expect_object({"supply_voltage", "bitrate", "rx_current", "rx_sensitivity_w", "rx_sensitivity_dbm",
                   "antenna_gain", "wavelength", "path_loss_exponent", "near_field_distance", "tx_power_table"});
  RadioModel r = rf230_radio();
  auto num = [](const Node& v) { return v.number(); };
  maybe(n, "supply_voltage", r.supply_voltage, num);
  maybe(n, "bitrate", r.bitrate, num);
  maybe(n, "rx_current", r.rx_current, num);
  maybe(n, "antenna_gain", r.antenna_gain, num);
  maybe(n, "wavelength", r.wavelength, num);
  maybe(n, "path_loss_exponent", r.path_loss_exponent, num);
  maybe(n, "near_field_distance", r.near_field_distance, num);
  if (n.has("rx_sensitivity_w") || n.has("rx_sensitivity_dbm"))
    r.rx_sensitivity = power_field(n, "rx_sensitivity_w", "rx_sensitivity_dbm");
  if (n.has("tx_power_table")) {
    const Node table = n["tx_power_table"];
    r.tx_power_table.clear();
    for (std::size_t i = 0; i < table.array_size(); ++i) {
      const Node row = table[i];
      row.expect_object({"power_w", "power_dbm", "current"});
      r.tx_power_table.push_back({power_field(row, "power_w", "power_dbm"), row["current"].non_negative()});
    }
  }
  return r;
}

EconomicParams parse_economics(const Node& n) {
  n.expect_object({"node_cost", "energy_cost", "labor_cost", "labor_costs", "interest_rate", "operational_lifetime",
                   "repair_cost", "failure_rate_per_hour", "max_visits", "max_visit_expenditure"});
  EconomicParams e = case_study_economics();
  auto num = [](const Node& v) { return v.number(); };
  maybe(n, "node_cost", e.node_cost, num);
  maybe(n, "energy_cost", e.energy_cost, num);
  maybe(n, "interest_rate", e.interest_rate, num);
  maybe(n, "operational_lifetime", e.operational_lifetime, num);
  maybe(n, "repair_cost", e.repair_cost, num);
  maybe(n, "failure_rate_per_hour", e.failure_rate_per_hour, num);
  maybe(n, "max_visit_expenditure", e.max_visit_expenditure, num);
  maybe(n, "max_visits", e.max_visits, [](const Node& v) { return static_cast<int>(v.integer()); });
  if (n.has("labor_cost") && n.has("labor_costs")) n.fail("give only one of labor_cost and labor_costs");
  if (n.has("labor_cost")) e.labor_costs = {n["labor_cost"].number()};
  if (n.has("labor_costs")) {
    e.labor_costs = n["labor_costs"].numbers();
    if (e.labor_costs.empty()) n["labor_costs"].fail("expected a non-empty array");
  }
  return e;
}

HardwareChoice parse_choice(const Node& n) {
  n.expect_object({"id", "cost", "failure_rate_per_hour", "redundancy"});
  HardwareChoice c;
  c.id = n["id"].string();
  c.cost = n["cost"].positive();
  c.failure_rate_per_hour = n["failure_rate_per_hour"].non_negative();
  maybe(n, "redundancy", c.redundancy, [](const Node& v) { return static_cast<int>(v.integer()); });
  return c;
}

void parse_hardware(const Node& n, ScenarioDocument& doc) {
  n.expect_object({"options", "redundancy", "locations"});
  if (n.has("options")) {
    const Node options = n["options"];
    for (std::size_t i = 0; i < options.array_size(); ++i) doc.hardware_choices.push_back(parse_choice(options[i]));
  }
  if (n.has("redundancy")) {
    const Node r = n["redundancy"];
    r.expect_object({"base", "min", "max"});
    const HardwareChoice base = parse_choice(r["base"]);
    const long long lo = r.has("min") ? r["min"].integer() : 1;
    const long long hi = r["max"].integer();
    if (lo < 1 || hi < lo) r.fail("expected 1 <= min <= max");
    for (HardwareChoice& c : redundancy_choices(base, static_cast<int>(lo), static_cast<int>(hi)))
      doc.hardware_choices.push_back(std::move(c));
  }
  if (n.has("locations")) doc.reliability_locations = n["locations"].count();
}

RunOptions parse_run(const Node& n) {
  n.expect_object({"lifetime", "schedule", "evl", "reliability", "figures"});
  RunOptions r;
  auto flag = [](const Node& v) { return v.boolean(); };
  maybe(n, "lifetime", r.lifetime, flag);
  maybe(n, "schedule", r.schedule, flag);
  maybe(n, "evl", r.evl, flag);
  maybe(n, "reliability", r.reliability, flag);
  maybe(n, "figures", r.figures, flag);
  return r;
}

Overrides parse_overrides(const Node& n) {
  n.expect_object({"network_power", "node_count", "mtbf_years"});
  Overrides o;
  if (n.has("network_power")) o.network_power = n["network_power"].positive();
  if (n.has("node_count")) o.node_count = n["node_count"].count();
  if (n.has("mtbf_years")) o.mtbf_years = n["mtbf_years"].positive();
  return o;
}

LifetimeFunction parse_lifetime_function(const Node& n) {
  n.expect_object({"slope", "hardware_cost", "labor_costs", "intercepts"});
  const double slope = n["slope"].positive();
  if (n.has("intercepts")) {
    if (n.has("hardware_cost") || n.has("labor_costs")) n.fail("intercepts exclude hardware_cost and labor_costs");
    const std::vector<double> b = n["intercepts"].numbers();
    if (b.empty()) n["intercepts"].fail("expected a non-empty array");
    try {
      return LifetimeFunction::from_intercepts(slope, b);
    } catch (const Error& e) {
      n["intercepts"].fail(e.what());
    }
  }
  const double hardware = n.has("hardware_cost") ? n["hardware_cost"].non_negative() : 0.0;
  std::vector<double> labor{0.0};
  if (n.has("labor_costs")) labor = n["labor_costs"].numbers();
  try {
    return LifetimeFunction(slope, hardware, labor);
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

ScenarioVariant parse_variant(const Node& n) {
  n.expect_object({"name", "node_cost", "labor_cost", "mtbf_years"});
  ScenarioVariant v;
  v.name = n["name"].string();
  if (n.has("node_cost")) v.node_cost = n["node_cost"].non_negative();
  if (n.has("labor_cost")) v.labor_cost = n["labor_cost"].non_negative();
  if (n.has("mtbf_years")) v.mtbf_years = n["mtbf_years"].positive();
  return v;
}

FigureOptions parse_figures(const Node& n) {
  n.expect_object({"labor_sweep", "reference_labor_cost", "phi_min", "phi_max", "phi_steps", "redundancy_min",
                   "redundancy_max", "variants"});
  FigureOptions f;
  maybe(n, "labor_sweep", f.labor_sweep, [](const Node& v) { return v.numbers(); });
  maybe(n, "reference_labor_cost", f.reference_labor_cost, [](const Node& v) { return v.non_negative(); });
  maybe(n, "phi_min", f.phi_min, [](const Node& v) { return v.positive(); });
  maybe(n, "phi_max", f.phi_max, [](const Node& v) { return v.positive(); });
  auto whole = [](const Node& v) { return static_cast<int>(v.integer()); };
  maybe(n, "phi_steps", f.phi_steps, whole);
  maybe(n, "redundancy_min", f.redundancy_min, whole);
  maybe(n, "redundancy_max", f.redundancy_max, whole);
  if (f.phi_steps < 1) n["phi_steps"].fail("expected an integer >= 1");
  if (f.phi_max < f.phi_min) n.fail("phi_max must be >= phi_min");
  if (f.redundancy_min < 1 || f.redundancy_max < f.redundancy_min)
    n.fail("expected 1 <= redundancy_min <= redundancy_max");
  if (n.has("variants")) {
    const Node list = n["variants"];
    for (std::size_t i = 0; i < list.array_size(); ++i) f.variants.push_back(parse_variant(list[i]));
  }
  return f;
}

}  // namespace

std::vector<ScenarioVariant> default_variants() {
  std::vector<ScenarioVariant> v(4);
  v[0].name = "default";
  v[1].name = "node_cost_100";
  v[1].node_cost = 100.0;
  v[2].name = "labor_140";
  v[2].labor_cost = 140.0;
  v[3].name = "mtbf_1_month";
  v[3].mtbf_years = 1.0 / 12.0;
  return v;
}

ScenarioDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("/: invalid JSON: ") + e.what());
  }
  const Node n(root, "");
  n.expect_object({"$schema", "name", "description", "locations", "radio", "economics", "hardware_choices", "run",
                   "overrides", "lifetime_function", "figures"});

  ScenarioDocument doc;
  if (n.has("name")) doc.name = n["name"].string();
  doc.scenario.radio = n.has("radio") ? parse_radio(n["radio"]) : rf230_radio();
  doc.scenario.econ = parse_economics(n["economics"]);
  if (n.has("locations")) {
    const Node list = n["locations"];
    for (std::size_t i = 0; i < list.array_size(); ++i) doc.scenario.locations.push_back(parse_location(list[i]));
  }
  if (n.has("hardware_choices")) parse_hardware(n["hardware_choices"], doc);
  if (n.has("run")) doc.run = parse_run(n["run"]);
  if (n.has("overrides")) doc.overrides = parse_overrides(n["overrides"]);
  if (n.has("lifetime_function")) doc.lifetime_function = parse_lifetime_function(n["lifetime_function"]);
  if (n.has("figures")) doc.figures = parse_figures(n["figures"]);
  if (doc.figures.variants.empty()) doc.figures.variants = default_variants();

  if (!doc.has_topology() && !doc.overrides.network_power && !doc.lifetime_function)
    n.fail("either locations or overrides/network_power must be given");
  if (doc.overrides.network_power && !doc.has_topology() && !doc.overrides.node_count)
    n["overrides"].fail("node_count is required when network_power replaces the topology");
  return doc;
}

ScenarioDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read scenario '" + path + "'");
  return parse_document(buf.str());
}

}  // namespace wsnpc

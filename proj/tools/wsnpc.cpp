#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wsnpc/document.hpp"
#include "wsnpc/error.hpp"
#include "wsnpc/pipeline.hpp"
#include "wsnpc/report.hpp"

namespace {

struct Options {
  std::string scenario;
  std::string format = "csv";
  std::string out;
  std::string table;
  std::uint64_t seed = 0;  // reserved, every solver is deterministic
  std::optional<double> phi_min;
  std::optional<double> phi_max;
  std::optional<int> phi_steps;
};

void only(wsnpc::RunOptions& run, bool schedule, bool reliability, bool figures) {
  run.schedule = schedule;
  run.evl = schedule;
  run.reliability = reliability;
  run.figures = figures;
}

std::string render(const wsnpc::Report& report, const Options& opt) {
  if (!opt.table.empty()) {
    const wsnpc::Table* t = report.find(opt.table);
    if (t == nullptr) throw wsnpc::ValidationError("report has no table '" + opt.table + "'");
    if (opt.format == "csv") return wsnpc::emit_csv(*t);
    wsnpc::Report single{report.scenario, {*t}};
    return wsnpc::emit_json(single);
  }
  return opt.format == "csv" ? wsnpc::emit_csv(report) : wsnpc::emit_json(report);
}

int run(const std::string& command, const Options& opt) {
  wsnpc::ScenarioDocument doc = wsnpc::load_document(opt.scenario);
  if (opt.phi_min) doc.figures.phi_min = *opt.phi_min;
  if (opt.phi_max) doc.figures.phi_max = *opt.phi_max;
  if (opt.phi_steps) doc.figures.phi_steps = *opt.phi_steps;

  if (command == "lifetime") {
    only(doc.run, false, false, false);
  } else if (command == "schedule") {
    only(doc.run, true, false, false);
  } else if (command == "reliability") {
    only(doc.run, false, true, false);
    if (doc.hardware_choices.empty()) {
      const wsnpc::HardwareChoice base{"node", doc.scenario.econ.node_cost,
                                       doc.scenario.econ.failure_rate_per_hour, 1};
      doc.hardware_choices =
          wsnpc::redundancy_choices(base, doc.figures.redundancy_min, doc.figures.redundancy_max);
    }
  } else if (command == "figures") {
    only(doc.run, false, false, true);
  }

  const wsnpc::PipelineResult result = wsnpc::run_pipeline(doc);
  const std::string text = render(result.report, opt);
  if (opt.out.empty()) {
    std::cout << text;
    if (!std::cout) throw wsnpc::IoError("cannot write to standard output");
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    f << text;
    if (!f) throw wsnpc::IoError("cannot write '" + opt.out + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Net present cost planner for sensor network deployment and maintenance"};
  app.require_subcommand(1);
  Options opt;

  const std::pair<const char*, const char*> commands[] = {
      {"plan", "deployment, visit schedule and hardware choice"},
      {"lifetime", "deployment and lifetime function only"},
      {"schedule", "visit schedule only"},
      {"reliability", "hardware and redundancy sweep"},
      {"figures", "figure data tables"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", opt.scenario, "scenario JSON document")->required();
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--table", opt.table, "emit a single table");
    sub->add_option("--seed", opt.seed, "reserved");
    if (std::string(name) == "figures" || std::string(name) == "plan") {
      sub->add_option("--phi-min", opt.phi_min, "lowest energy payment rate ($/s)");
      sub->add_option("--phi-max", opt.phi_max, "highest energy payment rate ($/s)");
      sub->add_option("--phi-steps", opt.phi_steps, "number of rates in the sweep");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(wsnpc::ErrorKind::kValidation);
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const wsnpc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(wsnpc::ErrorKind::kSolver);
  }
}

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgholder_app/config.hpp"
#include "sgholder_app/report.hpp"

namespace sgholder::app {

struct Experiment {
  std::string name;
  std::string description;
  std::string anchor;  // the statement the experiment tests
  int default_samples = 0;
  std::function<void(const Config&, Report&)> run;
};

// Registered experiments in a fixed order.
const std::vector<Experiment>& experiments();
const Experiment* find_experiment(const std::string& name);

// One line per experiment: name, description, anchor.
std::string list_experiments();

struct RunOutcome {
  Report report;
  int exit_code = 0;  // 0 all checks pass, 1 a check failed
};

// Dispatches to the named experiment. ConfigError for unknown experiments
// and invalid parameters. The wall-clock time enters the report only when
// record_wall_clock is set.
RunOutcome run_experiment(const Config& config, bool record_wall_clock = false);

// Writes the report (and CSV when configured) to the paths in the config.
void write_outputs(const Config& config, const Report& report);

}  // namespace sgholder::app

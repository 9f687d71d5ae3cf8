#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgholder_app/config.hpp"
#include "sgholder_app/experiments.hpp"
#include "sgholder_app/report.hpp"

namespace app = sgholder::app;

namespace {

int run(const std::string& path, const std::optional<std::uint64_t>& seed, const std::optional<int>& samples,
        const std::string& out, bool timing) {
  try {
    app::Config config = app::Config::load(path);
    if (seed) config.set_seed(*seed);
    if (samples) config.set_samples(*samples);
    if (!out.empty()) config.set_report_path(out);
    const auto start = std::chrono::steady_clock::now();
    auto outcome = app::run_experiment(config, timing);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (config.report_path())
      app::write_outputs(config, outcome.report);
    else {
      std::cout << outcome.report.dump();
      if (config.csv_path()) app::write_outputs(config, outcome.report);
    }
    for (const auto& c : outcome.report.checks())
      if (!c["pass"].get<bool>()) std::cerr << "FAIL " << c["name"].get<std::string>() << "\n";
    std::cerr << config.experiment() << ": " << (outcome.exit_code == 0 ? "pass" : "fail") << " ("
              << outcome.report.checks().size() << " checks, " << outcome.report.failures() << " failed, " << seconds
              << " s)\n";
    return outcome.exit_code;
  } catch (const app::ConfigError& e) {
    std::cerr << "config error";
    if (!e.field().empty()) std::cerr << " in '" << e.field() << "'";
    if (e.line() > 0) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << "\n";
    return 2;
  }
}

int plot(const std::string& report, const std::string& quantity, const std::string& out) {
  std::ifstream in(report);
  if (!in) {
    std::cerr << "cannot read " << report << "\n";
    return 2;
  }
  app::Json j;
  try {
    j = app::Json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "invalid report " << report << ": " << e.what() << "\n";
    return 2;
  }
  const std::string csv = app::emit_plot_data(j, quantity);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Semigroup Holder classes: numerical experiments"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", std::string(app::artifact_version()));

  std::string config_path, report_path, quantity, out;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  bool timing = false;

  auto* run_cmd = cli.add_subcommand("run", "Run the experiment described by a TOML config");
  run_cmd->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", seed, "Override the seed");
  run_cmd->add_option("--samples", samples, "Override the sample count")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", out, "Write the JSON report here instead of the configured path");
  run_cmd->add_flag("--timing", timing, "Record the wall-clock time in the report (breaks byte identity)");

  auto* list_cmd = cli.add_subcommand("list", "List experiments");

  auto* plot_cmd = cli.add_subcommand("plot", "Emit a sweep of a report as CSV (s,alpha,sample,value)");
  plot_cmd->add_option("report", report_path, "JSON report")->required();
  plot_cmd->add_option("quantity", quantity, "Sweep name; the first sweep when omitted");
  plot_cmd->add_option("--out", out, "Write the CSV here instead of stdout");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return run(config_path, seed, samples, out, timing);
    if (*list_cmd) {
      std::cout << app::list_experiments();
      return 0;
    }
    if (*plot_cmd) return plot(report_path, quantity, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgholder/riesz_morrey.hpp"

namespace sgholder::app {

using Json = nlohmann::ordered_json;

// One row of a long-format sweep table; s and alpha are left empty where
// they do not apply.
struct SweepRow {
  std::optional<double> s;
  std::optional<double> alpha;
  int sample = 0;
  std::optional<double> value;
};

class Report {
 public:
  Report(std::string experiment, Json config);

  void check(const std::string& name, const std::string& anchor, bool pass, Json detail = Json::object());
  void constant(const std::string& name, double value);
  void warn(const std::string& text);
  void sweep(const std::string& quantity, std::vector<SweepRow> rows);
  void add_anchor(const std::string& anchor);
  void set_wall_clock(double seconds) { wall_clock_ = seconds; }

  bool passed() const;
  int failures() const;
  const Json& checks() const { return checks_; }
  Json to_json() const;
  // Pretty-printed JSON with a trailing newline.
  std::string dump() const;

 private:
  std::string experiment_;
  Json config_;
  Json checks_ = Json::array();
  Json constants_ = Json::object();
  Json warnings_ = Json::array();
  Json sweeps_ = Json::object();
  std::vector<std::string> anchors_;
  std::optional<double> wall_clock_;
};

// Sweep rows from a ratio sweep: one per sample, s empty.
std::vector<SweepRow> ratio_rows(const riesz::RatioSweep& sweep);

// Summary statistics of a ratio sweep for a check detail.
Json sweep_summary(const riesz::RatioSweep& sweep);

// Long-format CSV "s,alpha,sample,value" of one sweep quantity of a report.
// An empty quantity selects the first sweep. Throws Error if the quantity is
// missing from a report that has sweeps.
std::string emit_plot_data(const Json& report, const std::string& quantity);

const char* artifact_version();

}  // namespace sgholder::app

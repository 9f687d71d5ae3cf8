#include "sgholder_app/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sgholder/errors.hpp"

#ifndef SGHOLDER_VERSION
#define SGHOLDER_VERSION "0.0.0"
#endif

namespace sgholder::app {

namespace {

Json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string format(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
  return std::string(buf, res.ptr);
}

}  // namespace

const char* artifact_version() { return SGHOLDER_VERSION; }

Report::Report(std::string experiment, Json config) : experiment_(std::move(experiment)), config_(std::move(config)) {}

void Report::check(const std::string& name, const std::string& anchor, bool pass, Json detail) {
  add_anchor(anchor);
  Json c = Json::object();
  c["name"] = name;
  c["anchor"] = anchor;
  c["pass"] = pass;
  c["detail"] = std::move(detail);
  checks_.push_back(std::move(c));
}

void Report::constant(const std::string& name, double value) {
  constants_[name] = std::isfinite(value) ? Json(value) : Json(nullptr);
}

void Report::warn(const std::string& text) { warnings_.push_back(text); }

void Report::sweep(const std::string& quantity, std::vector<SweepRow> rows) {
  Json table = Json::array();
  for (const auto& r : rows) table.push_back(Json::array({optional_number(r.s), optional_number(r.alpha), r.sample,
                                                          optional_number(r.value)}));
  sweeps_[quantity] = std::move(table);
}

void Report::add_anchor(const std::string& anchor) {
  if (!anchor.empty() && std::find(anchors_.begin(), anchors_.end(), anchor) == anchors_.end())
    anchors_.push_back(anchor);
}

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks_) n += c["pass"].get<bool>() ? 0 : 1;
  return n;
}

bool Report::passed() const { return failures() == 0; }

Json Report::to_json() const {
  Json j = Json::object();
  j["artifact"] = {{"name", "sgholder"}, {"version", artifact_version()}};
  j["experiment"] = experiment_;
  j["verdict"] = passed() ? "pass" : "fail";
  j["anchors"] = anchors_;
  j["config"] = config_;
  j["checks"] = checks_;
  j["constants"] = constants_;
  j["warnings"] = warnings_;
  j["sweeps"] = sweeps_;
  if (wall_clock_) j["wall_clock_seconds"] = *wall_clock_;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::vector<SweepRow> ratio_rows(const riesz::RatioSweep& sweep) {
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < sweep.ratios.size(); ++i) {
    SweepRow r;
    r.alpha = sweep.alpha;
    r.sample = static_cast<int>(i);
    if (std::isfinite(sweep.ratios[i])) r.value = sweep.ratios[i];
    rows.push_back(r);
  }
  return rows;
}

Json sweep_summary(const riesz::RatioSweep& sweep) {
  auto num = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  return Json{{"model", sweep.model},
              {"alpha", sweep.alpha},
              {"samples", sweep.samples},
              {"used", sweep.used},
              {"skipped", sweep.skipped},
              {"max", num(sweep.max)},
              {"min", num(sweep.min)},
              {"median", num(sweep.median)},
              {"half_max", num(sweep.half_max)},
              {"argmax", sweep.argmax},
              {"refined_ratio", num(sweep.refined_ratio)}};
}

std::string emit_plot_data(const Json& report, const std::string& quantity) {
  std::string out = "s,alpha,sample,value\n";
  if (!report.contains("sweeps") || !report["sweeps"].is_object()) throw Error("report has no sweeps section");
  const Json& sweeps = report["sweeps"];
  if (sweeps.empty()) return out;
  const Json* table = nullptr;
  if (quantity.empty()) {
    table = &sweeps.begin().value();
  } else {
    if (!sweeps.contains(quantity)) {
      std::string known;
      for (auto it = sweeps.begin(); it != sweeps.end(); ++it) known += (known.empty() ? "" : ", ") + it.key();
      throw Error("report has no sweep '" + quantity + "' (available: " + known + ")");
    }
    table = &sweeps[quantity];
  }
  for (const auto& row : *table) {
    out += format(row[0]) + "," + format(row[1]) + "," + format(row[2]) + "," + format(row[3]) + "\n";
  }
  return out;
}

}  // namespace sgholder::app

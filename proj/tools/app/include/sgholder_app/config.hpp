#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgholder/errors.hpp"
#include "sgholder/model.hpp"

namespace sgholder::app {

// Invalid configuration: the dotted field name and the source line (0 when
// the field is absent).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field, int line);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

struct ModelSpec {
  std::string kind;
  std::string field;  // dotted path of the table, for diagnostics
  nlohmann::ordered_json params;
  int line = 0;
};

// A parsed TOML experiment file. Typed getters take dotted paths such as
// "tolerance.identity" and throw ConfigError on a type mismatch.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& source = "<config>");
  static Config load(const std::string& path);

  Config(const Config&);
  Config& operator=(const Config&);
  Config(Config&&) noexcept;
  Config& operator=(Config&&) noexcept;
  ~Config();

  const std::string& experiment() const { return experiment_; }
  std::uint64_t seed() const { return seed_; }
  // Sample count, or the default when the file leaves it out.
  int samples(int fallback) const;
  std::vector<double> alphas(const std::vector<double>& fallback) const;

  double number(const std::string& path, double fallback) const;
  int integer(const std::string& path, int fallback) const;
  bool flag(const std::string& path, bool fallback) const;
  std::string text(const std::string& path, const std::string& fallback) const;
  std::vector<double> numbers(const std::string& path, const std::vector<double>& fallback) const;
  std::vector<int> integers(const std::string& path, const std::vector<int>& fallback) const;
  bool has(const std::string& path) const;

  // [model] or [[models]]; the fallback when neither is present.
  std::vector<ModelSpec> models(const std::vector<ModelSpec>& fallback) const;

  std::optional<std::string> report_path() const;
  std::optional<std::string> csv_path() const;
  std::string csv_quantity() const;

  void set_seed(std::uint64_t seed);
  void set_samples(int samples);
  void set_report_path(const std::string& path);

  // The configuration as JSON, after overrides.
  nlohmann::ordered_json echo() const;

 private:
  Config();
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string experiment_;
  std::uint64_t seed_ = 0;
};

ModelSpec model_spec(const std::string& kind, nlohmann::ordered_json params);

// Instantiates a chain or lattice model. ConfigError on unknown kinds or
// bad parameters.
std::unique_ptr<SemigroupModel> build_model(const ModelSpec& spec);

// Name used in reports, e.g. "cycle(16)".
std::string model_label(const ModelSpec& spec);

}  // namespace sgholder::app

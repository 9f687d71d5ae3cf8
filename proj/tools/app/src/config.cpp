#include "sgholder_app/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "sgholder/group.hpp"
#include "sgholder/models.hpp"

namespace sgholder::app {

namespace {

std::string describe(const std::string& what, const std::string& field, int line) {
  std::ostringstream out;
  out << what;
  if (!field.empty()) out << " (field '" << field << "'";
  if (!field.empty() && line > 0) out << ", line " << line;
  if (!field.empty()) out << ")";
  if (field.empty() && line > 0) out << " (line " << line << ")";
  return out.str();
}

std::vector<std::string> split(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int line_of(const toml::node& n) { return static_cast<int>(n.source().begin.line); }

nlohmann::ordered_json to_json(const toml::node& n) {
  std::ostringstream out;
  if (const auto* t = n.as_table()) {
    out << toml::json_formatter{*t};
  } else if (const auto* a = n.as_array()) {
    out << toml::json_formatter{*a};
  } else {
    toml::array wrap;
    wrap.push_back(n);
    out << toml::json_formatter{wrap};
    return nlohmann::ordered_json::parse(out.str()).at(0);
  }
  return nlohmann::ordered_json::parse(out.str());
}

double json_number(const ModelSpec& spec, const char* key, double fallback) {
  if (!spec.params.contains(key)) return fallback;
  const auto& v = spec.params.at(key);
  if (!v.is_number()) throw ConfigError("expected a number", spec.field + "." + key, spec.line);
  return v.get<double>();
}

int json_integer(const ModelSpec& spec, const char* key, std::optional<int> fallback) {
  if (!spec.params.contains(key)) {
    if (!fallback) throw ConfigError("missing required parameter", spec.field + "." + key, spec.line);
    return *fallback;
  }
  const auto& v = spec.params.at(key);
  if (!v.is_number_integer()) throw ConfigError("expected an integer", spec.field + "." + key, spec.line);
  return v.get<int>();
}

std::string json_text(const ModelSpec& spec, const char* key, std::optional<std::string> fallback) {
  if (!spec.params.contains(key)) {
    if (!fallback) throw ConfigError("missing required parameter", spec.field + "." + key, spec.line);
    return *fallback;
  }
  const auto& v = spec.params.at(key);
  if (!v.is_string()) throw ConfigError("expected a string", spec.field + "." + key, spec.line);
  return v.get<std::string>();
}

}  // namespace

ConfigError::ConfigError(const std::string& what, std::string field, int line)
    : Error(describe(what, field, line)), field_(std::move(field)), line_(line) {}

struct Config::Impl {
  toml::table root;

  const toml::node* find(const std::string& path) const {
    const toml::node* cur = &root;
    for (const auto& part : split(path)) {
      const auto* t = cur->as_table();
      if (!t) return nullptr;
      cur = t->get(part);
      if (!cur) return nullptr;
    }
    return cur;
  }

  toml::table& table_for(const std::string& path, std::string* leaf) {
    auto parts = split(path);
    *leaf = parts.back();
    parts.pop_back();
    toml::table* cur = &root;
    for (const auto& part : parts) {
      auto* next = cur->get_as<toml::table>(part);
      if (!next) {
        cur->insert_or_assign(part, toml::table{});
        next = cur->get_as<toml::table>(part);
      }
      cur = next;
    }
    return *cur;
  }
};

Config::Config() : impl_(std::make_unique<Impl>()) {}
Config::Config(const Config& o) : impl_(std::make_unique<Impl>(*o.impl_)), experiment_(o.experiment_), seed_(o.seed_) {}
Config& Config::operator=(const Config& o) {
  if (this != &o) {
    impl_ = std::make_unique<Impl>(*o.impl_);
    experiment_ = o.experiment_;
    seed_ = o.seed_;
  }
  return *this;
}
Config::Config(Config&&) noexcept = default;
Config& Config::operator=(Config&&) noexcept = default;
Config::~Config() = default;

Config Config::parse(const std::string& text, const std::string& source) {
  Config c;
  try {
    c.impl_->root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("TOML syntax error: ") + std::string(e.description()), "",
                      static_cast<int>(e.source().begin.line));
  }
  const toml::node* exp = c.impl_->find("experiment");
  if (!exp) throw ConfigError("missing experiment name", "experiment", 0);
  if (!exp->is_string()) throw ConfigError("expected a string", "experiment", line_of(*exp));
  c.experiment_ = **exp->as_string();
  const toml::node* seed = c.impl_->find("seed");
  if (!seed) throw ConfigError("missing seed", "seed", 0);
  if (!seed->is_integer() || **seed->as_integer() < 0)
    throw ConfigError("seed must be a nonnegative integer", "seed", line_of(*seed));
  c.seed_ = static_cast<std::uint64_t>(**seed->as_integer());
  if (const toml::node* s = c.impl_->find("samples")) {
    if (!s->is_integer() || **s->as_integer() < 1) throw ConfigError("samples must be a positive integer", "samples", line_of(*s));
  }
  if (const toml::node* a = c.impl_->find("alpha")) {
    const auto* arr = a->as_array();
    if (!arr && !a->is_number()) throw ConfigError("alpha must be a number or an array of numbers", "alpha", line_of(*a));
    for (double v : c.alphas({})) {
      if (!(v > 0.0 && v < 1.0)) throw ConfigError("alpha must lie in (0, 1)", "alpha", line_of(*a));
    }
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path, "", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

int Config::samples(int fallback) const { return integer("samples", fallback); }

std::vector<double> Config::alphas(const std::vector<double>& fallback) const {
  const toml::node* a = impl_->find("alpha");
  if (a && a->is_number()) return {number("alpha", 0.0)};
  return numbers("alpha", fallback);
}

bool Config::has(const std::string& path) const { return impl_->find(path) != nullptr; }

double Config::number(const std::string& path, double fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  if (const auto* v = n->as_floating_point()) return **v;
  if (const auto* v = n->as_integer()) return static_cast<double>(**v);
  throw ConfigError("expected a number", path, line_of(*n));
}

int Config::integer(const std::string& path, int fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  if (const auto* v = n->as_integer()) return static_cast<int>(**v);
  throw ConfigError("expected an integer", path, line_of(*n));
}

bool Config::flag(const std::string& path, bool fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  if (const auto* v = n->as_boolean()) return **v;
  throw ConfigError("expected a boolean", path, line_of(*n));
}

std::string Config::text(const std::string& path, const std::string& fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  if (const auto* v = n->as_string()) return **v;
  throw ConfigError("expected a string", path, line_of(*n));
}

std::vector<double> Config::numbers(const std::string& path, const std::vector<double>& fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  const auto* arr = n->as_array();
  if (!arr) throw ConfigError("expected an array of numbers", path, line_of(*n));
  std::vector<double> out;
  for (const auto& e : *arr) {
    if (const auto* v = e.as_floating_point())
      out.push_back(**v);
    else if (const auto* v = e.as_integer())
      out.push_back(static_cast<double>(**v));
    else
      throw ConfigError("expected an array of numbers", path, line_of(e));
  }
  return out;
}

std::vector<int> Config::integers(const std::string& path, const std::vector<int>& fallback) const {
  const toml::node* n = impl_->find(path);
  if (!n) return fallback;
  const auto* arr = n->as_array();
  if (!arr) throw ConfigError("expected an array of integers", path, line_of(*n));
  std::vector<int> out;
  for (const auto& e : *arr) {
    const auto* v = e.as_integer();
    if (!v) throw ConfigError("expected an array of integers", path, line_of(e));
    out.push_back(static_cast<int>(**v));
  }
  return out;
}

std::vector<ModelSpec> Config::models(const std::vector<ModelSpec>& fallback) const {
  std::vector<std::pair<const toml::table*, std::string>> tables;
  if (const toml::node* m = impl_->find("model")) {
    const auto* t = m->as_table();
    if (!t) throw ConfigError("expected a table", "model", line_of(*m));
    tables.emplace_back(t, "model");
  }
  if (const toml::node* ms = impl_->find("models")) {
    const auto* arr = ms->as_array();
    if (!arr) throw ConfigError("expected an array of tables", "models", line_of(*ms));
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const auto* t = arr->get(i)->as_table();
      if (!t) throw ConfigError("expected an array of tables", "models", line_of(*arr->get(i)));
      tables.emplace_back(t, "models[" + std::to_string(i) + "]");
    }
  }
  if (tables.empty()) return fallback;
  std::vector<ModelSpec> out;
  for (const auto& [t, field] : tables) {
    ModelSpec spec;
    spec.field = field;
    spec.line = line_of(*t);
    spec.params = to_json(*t);
    if (!spec.params.contains("kind") || !spec.params["kind"].is_string())
      throw ConfigError("model needs a string 'kind'", field + ".kind", spec.line);
    spec.kind = spec.params["kind"].get<std::string>();
    out.push_back(std::move(spec));
  }
  return out;
}

std::optional<std::string> Config::report_path() const {
  if (!has("output.report")) return std::nullopt;
  return text("output.report", "");
}

std::optional<std::string> Config::csv_path() const {
  if (!has("output.csv")) return std::nullopt;
  return text("output.csv", "");
}

std::string Config::csv_quantity() const { return text("output.quantity", ""); }

void Config::set_seed(std::uint64_t seed) {
  seed_ = seed;
  impl_->root.insert_or_assign("seed", static_cast<std::int64_t>(seed));
}

void Config::set_samples(int samples) {
  if (samples < 1) throw ConfigError("samples must be a positive integer", "samples", 0);
  impl_->root.insert_or_assign("samples", static_cast<std::int64_t>(samples));
}

void Config::set_report_path(const std::string& path) {
  std::string leaf;
  impl_->table_for("output.report", &leaf).insert_or_assign(leaf, path);
}

nlohmann::ordered_json Config::echo() const { return to_json(impl_->root); }

ModelSpec model_spec(const std::string& kind, nlohmann::ordered_json params) {
  ModelSpec spec;
  spec.kind = kind;
  spec.field = "model";
  params["kind"] = kind;
  spec.params = std::move(params);
  return spec;
}

std::string model_label(const ModelSpec& spec) {
  const auto& p = spec.params;
  auto get = [&](const char* key, const std::string& fallback) {
    if (!p.contains(key)) return fallback;
    const auto& v = p.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (spec.kind == "two_point") return "two_point";
  if (spec.kind == "cycle" || spec.kind == "complete") return spec.kind + "(" + get("n", "?") + ")";
  if (spec.kind == "hypercube") return "hypercube(" + get("d", "?") + ")";
  if (spec.kind == "path") return "path";
  if (spec.kind == "edge_list") return "edge_list(" + get("file", "?") + ")";
  if (spec.kind == "torus") return "torus(n=" + get("dimension", "1") + ",F=" + get("bandwidth", "?") + ")";
  if (spec.kind == "integer_group") return "integer_group(" + get("psi", "square") + ",F=" + get("bandwidth", "?") + ")";
  return spec.kind;
}

std::unique_ptr<SemigroupModel> build_model(const ModelSpec& spec) {
  const std::string label = model_label(spec);
  try {
    if (spec.kind == "two_point") return models::chain(models::two_point(json_number(spec, "rate", 1.0)), label);
    if (spec.kind == "cycle")
      return models::chain(models::cycle(json_integer(spec, "n", std::nullopt), json_number(spec, "rate", 1.0)), label);
    if (spec.kind == "hypercube")
      return models::chain(models::hypercube(json_integer(spec, "d", std::nullopt), json_number(spec, "rate", 1.0)),
                           label);
    if (spec.kind == "complete")
      return models::chain(models::complete(json_integer(spec, "n", std::nullopt), json_number(spec, "rate", 1.0)),
                           label);
    if (spec.kind == "path") {
      if (!spec.params.contains("rates") || !spec.params["rates"].is_array())
        throw ConfigError("path needs an array 'rates'", spec.field + ".rates", spec.line);
      std::vector<double> rates;
      for (const auto& v : spec.params["rates"]) {
        if (!v.is_number()) throw ConfigError("expected an array of numbers", spec.field + ".rates", spec.line);
        rates.push_back(v.get<double>());
      }
      return models::chain(models::path(rates), label);
    }
    if (spec.kind == "edge_list") {
      const std::string file = json_text(spec, "file", std::nullopt);
      try {
        return models::chain(models::read_edge_list_file(file), label);
      } catch (const ParseError& e) {
        throw ConfigError(std::string("edge list: ") + e.what() + " at line " + std::to_string(e.line()),
                          spec.field + ".file", spec.line);
      }
    }
    if (spec.kind == "torus") {
      return models::torus(json_integer(spec, "dimension", 1), json_integer(spec, "bandwidth", std::nullopt),
                           json_integer(spec, "grid", 0));
    }
    if (spec.kind == "integer_group") {
      const int bandwidth = json_integer(spec, "bandwidth", std::nullopt);
      const std::string psi = json_text(spec, "psi", std::string("square"));
      std::function<double(int)> length;
      if (psi == "square")
        length = [](int k) { return static_cast<double>(k) * k; };
      else if (psi == "abs")
        length = [](int k) { return static_cast<double>(std::abs(k)); };
      else if (psi == "heat")
        length = [](int k) { return 4.0 * kPi * kPi * k * k; };
      else
        throw ConfigError("unknown length function '" + psi + "' (square, abs, heat)", spec.field + ".psi", spec.line);
      const auto cn = groups::conditionally_negative_check_z(bandwidth, length);
      if (!cn.conditionally_negative)
        throw ConfigError("length function is not conditionally negative", spec.field + ".psi", spec.line);
      return models::integer_group(
          bandwidth, [length](const std::vector<int>& k) { return length(k.at(0)); }, label,
          json_integer(spec, "grid", 0));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid model: ") + e.what(), spec.field, spec.line);
  }
  throw ConfigError("unknown model kind '" + spec.kind +
                        "' (two_point, cycle, hypercube, complete, path, edge_list, torus, integer_group)",
                    spec.field + ".kind", spec.line);
}

}  // namespace sgholder::app

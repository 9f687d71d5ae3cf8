#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sgholder/models.hpp"
#include "sgholder_app/config.hpp"
#include "sgholder_app/experiments.hpp"
#include "sgholder_app/report.hpp"

using namespace sgholder::app;
namespace fs = std::filesystem;

namespace {

int exit_code(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sgholder_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Config, MissingSeedNamesTheField) {
  try {
    Config::parse("experiment = \"gamma2_positivity\"\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "seed");
  }
}

TEST(Config, SyntaxErrorsCarryTheLine) {
  try {
    Config::parse("experiment = \"x\"\nseed = 1\nalpha = [0.5,\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_GE(e.line(), 3);
  }
}

TEST(Config, AlphaOutsideTheUnitIntervalIsRejected) {
  EXPECT_THROW(Config::parse("experiment = \"x\"\nseed = 1\nalpha = [0.5, 1.5]\n"), ConfigError);
  EXPECT_THROW(Config::parse("experiment = \"x\"\nseed = -3\n"), ConfigError);
  EXPECT_THROW(Config::parse("experiment = \"x\"\nseed = 1\nsamples = 0\n"), ConfigError);
}

TEST(Config, TypedGettersAndModels) {
  const auto c = Config::parse(
      "experiment = \"riesz_equivalence\"\nseed = 9\nsamples = 12\n[tolerance]\nidentity = 1e-6\n"
      "[[models]]\nkind = \"cycle\"\nn = 12\n[[models]]\nkind = \"torus\"\ndimension = 1\nbandwidth = 4\n");
  EXPECT_EQ(c.seed(), 9u);
  EXPECT_EQ(c.samples(100), 12);
  EXPECT_DOUBLE_EQ(c.number("tolerance.identity", 0.0), 1e-6);
  EXPECT_DOUBLE_EQ(c.number("tolerance.other", 0.25), 0.25);
  const auto ms = c.models({});
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(model_label(ms[0]), "cycle(12)");
  EXPECT_EQ(build_model(ms[1])->size(), sgholder::models::torus(1, 4)->size());
  EXPECT_THROW(c.integer("tolerance.identity", 0), ConfigError);
}

TEST(Config, UnknownModelKind) {
  const auto c = Config::parse("experiment = \"riesz_equivalence\"\nseed = 1\n[model]\nkind = \"moebius\"\n");
  EXPECT_THROW(build_model(c.models({}).front()), ConfigError);
}

TEST(Report, PlotDataFormats) {
  Report r("demo", Json::object());
  EXPECT_EQ(emit_plot_data(r.to_json(), ""), "s,alpha,sample,value\n");
  r.sweep("ratio", {{std::nullopt, 0.5, 0, 1.25}, {0.1, std::nullopt, 1, std::nullopt}});
  EXPECT_EQ(emit_plot_data(r.to_json(), "ratio"), "s,alpha,sample,value\n,0.5,0,1.25\n0.1,,1,\n");
  EXPECT_THROW(emit_plot_data(r.to_json(), "missing"), sgholder::Error);
}

TEST(Report, VerdictAndAnchors) {
  Report r("demo", Json::object());
  r.check("a", "Statement A", true);
  EXPECT_TRUE(r.passed());
  r.check("b", "Statement B", false);
  EXPECT_EQ(r.failures(), 1);
  const Json j = r.to_json();
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["anchors"].size(), 2u);
  EXPECT_FALSE(j.contains("wall_clock_seconds"));
}

TEST(Experiments, ListingIsStableAndComplete) {
  const std::string a = list_experiments(), b = list_experiments();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("riesz_equivalence"), std::string::npos);
  EXPECT_NE(a.find("morrey_ratio"), std::string::npos);
  EXPECT_LT(a.find("subordination_accuracy"), a.find("holder_campanato"));
  for (const auto& e : experiments()) EXPECT_FALSE(e.anchor.empty()) << e.name;
}

TEST(Experiments, EveryCheckCarriesAnEmbeddedAnchor) {
  const auto c = Config::parse("experiment = \"cocycle_roundtrip\"\nseed = 3\n");
  const auto out = run_experiment(c);
  const Json j = out.report.to_json();
  for (const auto& chk : j["checks"]) {
    bool found = false;
    for (const auto& a : j["anchors"]) found = found || a == chk["anchor"];
    EXPECT_TRUE(found);
  }
}

TEST(Experiments, UnattainableToleranceIsAViolation) {
  const auto c = Config::parse("experiment = \"subordination_accuracy\"\nseed = 1\n[tolerance]\nsubordination = 1e-30\n");
  const auto out = run_experiment(c);
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_FALSE(out.report.passed());
}

TEST(Cli, ExitCodes) {
  const std::string bin = SGHOLDER_BIN;
  const fs::path missing = scratch("missing_seed.toml");
  write(missing, "experiment = \"gamma2_positivity\"\n");
  EXPECT_EQ(exit_code(bin + " run " + missing.string()), 2);
  const fs::path broken = scratch("broken_tol.toml");
  write(broken, "experiment = \"subordination_accuracy\"\nseed = 1\n[tolerance]\nsubordination = 1e-30\n");
  EXPECT_EQ(exit_code(bin + " run " + broken.string() + " --out " + scratch("broken.json").string()), 1);
  EXPECT_NE(slurp(scratch("broken.json")).find("\"pass\": false"), std::string::npos);
  const fs::path unknown = scratch("unknown.toml");
  write(unknown, "experiment = \"nope\"\nseed = 1\n");
  EXPECT_EQ(exit_code(bin + " run " + unknown.string()), 2);
  EXPECT_EQ(exit_code(bin + " list"), 0);
}

TEST(Cli, RieszOnTheCycleRunsClean) {
  const std::string bin = SGHOLDER_BIN;
  const fs::path out = scratch("riesz_c16.json");
  EXPECT_EQ(exit_code(bin + " run " + std::string(SGHOLDER_CONFIGS) + "/riesz_c16.toml --out " + out.string()), 0);
  EXPECT_NE(slurp(out).find("\"verdict\": \"pass\""), std::string::npos);
}

TEST(Cli, ReportsAndCsvAreByteIdentical) {
  const std::string bin = SGHOLDER_BIN;
  const fs::path cfg = scratch("det.toml");
  write(cfg, "experiment = \"norm_comparison\"\nseed = 5\nsamples = 20\n");
  const fs::path out = scratch("det.json"), a = scratch("det_a.json"), b = scratch("det_b.json");
  ASSERT_EQ(exit_code(bin + " run " + cfg.string() + " --out " + out.string()), 0);
  fs::rename(out, a);
  ASSERT_EQ(exit_code(bin + " run " + cfg.string() + " --out " + out.string()), 0);
  fs::rename(out, b);
  EXPECT_EQ(slurp(a), slurp(b));
  const fs::path ca = scratch("det_a.csv"), cb = scratch("det_b.csv");
  ASSERT_EQ(exit_code(bin + " plot " + a.string() + " --out " + ca.string()), 0);
  ASSERT_EQ(exit_code(bin + " plot " + b.string() + " --out " + cb.string()), 0);
  EXPECT_EQ(slurp(ca), slurp(cb));
  EXPECT_EQ(slurp(ca).rfind("s,alpha,sample,value\n", 0), 0u);
}

TEST(Cli, SeedOverrideChangesTheSamples) {
  const std::string bin = SGHOLDER_BIN;
  const fs::path cfg = scratch("seed.toml");
  write(cfg, "experiment = \"norm_comparison\"\nseed = 5\nsamples = 5\n");
  const fs::path a = scratch("seed_a.json"), b = scratch("seed_b.json");
  ASSERT_EQ(exit_code(bin + " run " + cfg.string() + " --out " + a.string()), 0);
  ASSERT_EQ(exit_code(bin + " run " + cfg.string() + " --seed 6 --out " + b.string()), 0);
  EXPECT_NE(slurp(a), slurp(b));
  EXPECT_NE(slurp(b).find("\"seed\": 6"), std::string::npos);
}

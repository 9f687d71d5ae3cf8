// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgholder_app/config.hpp"
#include "sgholder_app/experiments.hpp"

using namespace sgholder::app;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string config;
  double budget_seconds;  // 0: no runtime bound
  // Names (substrings) that must appear among the checks, with the count expected.
  std::vector<std::pair<std::string, int>> required;
};

int count_checks(const Json& report, const std::string& needle) {
  int n = 0;
  for (const auto& c : report["checks"]) n += c["name"].get<std::string>().find(needle) != std::string::npos;
  return n;
}

std::string failures(const Json& report) {
  std::string out;
  for (const auto& c : report["checks"])
    if (!c["pass"].get<bool>()) out += (out.empty() ? "" : "; ") + c["name"].get<std::string>();
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "subordination quadrature within 1e-8",
       "experiment = \"subordination_accuracy\"\nseed = 1\ntimes = [0.1, 1.0, 10.0]\nlambda_points = 61\n"
       "[tolerance]\nsubordination = 1e-8\n",
       1.0, {{"scalar subordination error below tolerance", 1}}},
      {2, "eigenfunction closed form within 1e-3",
       "experiment = \"holder_eigenfunction\"\nseed = 1\nalpha = [0.25, 0.5, 0.75]\n"
       "lambdas = [1.0, 39.47841760435743, 100.0]\n[tolerance]\nrelative = 1e-3\n",
       1.0, {{"eigenfunction closed form", 9}}},
      {3, "Gamma2 >= 0 on two-point, C_N, hypercubes, K_N", "experiment = \"gamma2_positivity\"\nseed = 1\n", 30.0,
       {{"Gamma2 >= 0 [two_point]", 1}, {"Gamma2 >= 0 [cycle(64)]", 1}, {"Gamma2 >= 0 [hypercube(5)]", 1},
        {"Gamma2 >= 0 [complete(16)]", 1}, {"Gamma2 >= 0", 32}}},
      {4, "space-time gradient identity within 1e-9",
       "experiment = \"space_time_gradient\"\nseed = 7\nsamples = 50\ns_points = 20\n"
       "[[models]]\nkind = \"cycle\"\nn = 16\n[[models]]\nkind = \"hypercube\"\nd = 4\n",
       30.0, {{"dG/ds = 2 P_s Gammahat[P_s f]", 2}}},
      {5, "Riesz ratios bounded, doubling-stable, reverse >= 1",
       "experiment = \"riesz_equivalence\"\nseed = 42\nsamples = 100\nalpha = [0.25, 0.5, 0.75]\n", 300.0,
       {{"forward ratio", 36}, {"reverse ratio", 48}, {"stable under sample doubling", 24}, {"reverse ratio >= 1", 12}}},
      {6, "gradient domination bounded and refinement-stable",
       "experiment = \"domgamma\"\nseed = 42\nsamples = 100\np = [inf]\n", 120.0,
       {{"stable under grid refinement", 4}}},
      {7, "square-oscillation identities and pointwise inequalities",
       "experiment = \"campanato_identities\"\nseed = 3\nsamples = 50\n[tolerance]\nidentity = 1e-7\nslack = 1e-8\n",
       180.0, {{"T_t|f|^2", 2}, {"P_s|f|^2", 2}, {"(i) double-integral identity", 2}, {"(ii) and (iii)", 2}}},
      {8, "Campanato comparison with explicit constants",
       "experiment = \"norm_comparison\"\nseed = 5\nsamples = 200\nalpha = [0.1, 0.25, 0.4]\n"
       "[tolerance]\nslack = 1e-8\n",
       120.0, {{"Lip <= (1 + 2^alpha)", 3}, {"lip <= (1 - 2^(alpha - 1/2))^-1 Lip", 3}, {"exactly", 3}}},
      {9, "ultracontractivity exponents 1 and 2", "experiment = \"ultracontractivity\"\nseed = 1\n", 10.0,
       {{"fitted dimension", 2}}},
      {10, "Morrey ratio on the circle, p = 2",
       "experiment = \"morrey_ratio\"\nseed = 11\nsamples = 200\np = [2.0]\n", 120.0,
       {{"stable under grid refinement", 1}, {"reverse chain", 1}}},
      {11, "analytic multipliers within C(alpha) ||M||",
       "experiment = \"analytic_multiplier\"\nseed = 13\nsamples = 100\nalpha = [0.5]\n", 120.0,
       {{"constant profile gives ratio 1", 2}, {"ratio within C(alpha) ||M||", 12}}},
      {12, "quantum torus: Weaver vs semigroup norm, Theta = 0 oracle",
       "experiment = \"quantum_torus\"\nseed = 17\nsamples = 25\nalpha = [0.5]\n"
       "[quantum_torus]\ntheta = 0.3\ndegree = 1\nbox = 24\n",
       600.0, {{"in [1/C, C]", 1}, {"Theta = 0", 3}}},
      {13, "cocycle round trip and rejection", "experiment = \"cocycle_roundtrip\"\nseed = 19\n", 30.0,
       {{"cocycle reconstructs psi", 9}, {"perturbed length rejected", 6}}},
  };
}

}  // namespace

int main() {
  int failed = 0;
  std::vector<std::pair<std::string, std::string>> first_runs;
  for (const auto& c : criteria()) {
    bool ok = true;
    std::string why;
    double seconds = 0.0;
    try {
      const Config cfg = Config::parse(c.config, "criterion " + std::to_string(c.id));
      const auto start = std::chrono::steady_clock::now();
      const RunOutcome out = run_experiment(cfg);
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const Json j = out.report.to_json();
      if (!out.report.passed()) ok = false, why = failures(j);
      for (const auto& [needle, n] : c.required) {
        const int got = count_checks(j, needle);
        if (got != n) ok = false, why += (why.empty() ? "" : "; ") + ("expected " + std::to_string(n) + " '" + needle + "' checks, found " + std::to_string(got));
      }
      if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds)
        ok = false, why += (why.empty() ? "" : "; ") + std::string("over the runtime budget");
      if (c.id != 12) first_runs.emplace_back(c.config, out.report.dump());
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    failed += !ok;
    std::printf("%s  %2d  %-58s %9.3f s / %4.0f s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.budget_seconds, why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }

  // Determinism: rerun every configuration and compare the serialized
  // reports byte for byte; the quantum torus is rerun on a reduced sample.
  bool same = true;
  std::string why;
  const auto start = std::chrono::steady_clock::now();
  try {
    for (const auto& [text, report] : first_runs)
      if (run_experiment(Config::parse(text)).report.dump() != report) same = false, why = "report differs on rerun";
    const std::string qt = "experiment = \"quantum_torus\"\nseed = 17\nsamples = 2\n";
    if (run_experiment(Config::parse(qt)).report.dump() != run_experiment(Config::parse(qt)).report.dump())
      same = false, why = "quantum torus report differs on rerun";
  } catch (const std::exception& e) {
    same = false;
    why = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  failed += !same;
  std::printf("%s  14  %-58s %9.3f s%s%s\n", same ? "PASS" : "FAIL", "byte-identical reports on rerun", seconds,
              why.empty() ? "" : "  ", why.c_str());
  return failed == 0 ? 0 : 1;
}

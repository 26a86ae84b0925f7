#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ltlab/cli/suites.hpp"

using namespace ltlab;
using namespace ltlab::cli;

namespace {

struct Overrides {
  std::optional<int> p, f, N, D, n, threshold;
  std::optional<std::string> preset;
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "residue characteristic");
    app->add_option("--f", f, "residue degree");
    app->add_option("--N", N, "working precision in pi-digits");
    app->add_option("--D", D, "series truncation degree");
    app->add_option("--n", n, "tower level");
    app->add_option("--threshold", threshold, "vanishing threshold in pi-digits");
    app->add_option("--preset", preset, "P: canonical, multiplicative or random(seed)");
    app->add_option("--seed", seed, "seed of the random polynomial family");
  }

  void apply(json& j) const {
    if (p) j["p"] = *p;
    if (f) j["f"] = *f;
    if (N) j["N"] = *N;
    if (D) j["D"] = *D;
    if (n) j["n"] = *n;
    if (threshold) j["threshold"] = *threshold;
    if (preset) j["P"] = *preset;
    if (seed) j["seed"] = *seed;
  }
};

RunConfig build_config(const std::string& path, const Overrides& ov) {
  json j = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ConfigError, "cannot open config '" + path + "'");
    try {
      in >> j;
    } catch (const json::exception& e) {
      fail(ErrorKind::ConfigError, std::string("malformed config: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");
  }
  ov.apply(j);
  if (j.contains("cases") && j["cases"].is_array())
    for (auto& c : j["cases"]) ov.apply(c);
  return parse_config(j);
}

void emit(const json& j, const std::string& out, const std::string& format) {
  const std::string text = format == "text" ? to_text(j) : j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) fail(ErrorKind::ConfigError, "cannot write '" + out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lubin-Tate exponentials laboratory"};
  app.require_subcommand(1);

  std::string config, out, format = "json", target, suite;
  Overrides ov;

  auto* compute = app.add_subcommand("compute", "compute a single object and print it");
  compute->add_option("target", target, "fg, log, exp, e_p, curly_e, witt or tower")->required();
  compute->add_option("--config", config, "JSON case configuration");
  compute->add_option("--out", out, "output file");
  compute->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ov.add_to(compute);

  auto* check = app.add_subcommand("check", "run a claim suite and write a report");
  check->add_option("suite", suite, "thm1, prop2, prop3, thm4, witt_axioms or all");
  check->add_option("--config", config, "JSON run configuration");
  check->add_option("--out", out, "report file");
  check->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ov.add_to(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    RunConfig rc = build_config(config, ov);
    if (out.empty()) out = rc.out;
    if (*compute) {
      CaseConfig c = rc.cases.empty() ? rc.base : expand_cases(rc, "thm1").front();
      emit(compute_target(target, c), out, format);
      return kPass;
    }
    json report;
    if (!suite.empty()) {
      report = run_suite(suite, rc);
    } else if (rc.checks.size() == 1) {
      report = run_suite(rc.checks.front(), rc);
    } else if (!rc.checks.empty()) {
      report["suite"] = "checks";
      for (const auto& s : rc.checks) report["suites"][s] = run_suite(s, rc);
    } else {
      fail(ErrorKind::ConfigError, "no suite given");
    }
    const int code = exit_code(report);
    emit(report, out, format);
    std::cerr << "exit " << code << "\n";
    return code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::ConfigError) return kConfigError;
    if (e.kind() == ErrorKind::PrecisionExhausted || e.kind() == ErrorKind::ThresholdTooHigh) return kPrecisionExhausted;
    return kClaimFailure;
  }
}

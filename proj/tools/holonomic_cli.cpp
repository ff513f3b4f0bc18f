// Copyright 2026 The Holonomic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end over the experiment reports.
//
// Exit codes: 0 success, 1 failed checks, 2 configuration error,
// 3 hypothesis not met, 4 discounted solver did not converge.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "holonomic/config.hpp"
#include "holonomic/reports.hpp"

namespace {

using namespace holonomic;

struct Options {
  std::string config;
  std::string out;
  std::string format = "json";
  std::optional<int> k_max;
  std::optional<std::uint64_t> seed;
  std::string boundary;
  std::string kind = "maximal";
  int repeats = 5;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw ConfigError(0, "cannot write " + opt.out);
  file << text;
}

ExperimentConfig load(const Options& opt) {
  ExperimentConfig cfg = load_config(opt.config);
  if (opt.k_max) {
    if (*opt.k_max < 2 || *opt.k_max > 60) throw ConfigError(0, "--schedule must lie in [2, 60]");
    cfg.solver.k_max = *opt.k_max;
  }
  if (opt.seed) cfg.solver.seed = *opt.seed;
  return cfg;
}

std::vector<Rational> parse_boundary(const std::string& text) {
  std::vector<Rational> out;
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  for (std::string tok; in >> tok;) {
    try {
      out.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
      throw ConfigError(0, "--boundary: cannot parse '" + tok + "'");
    }
  }
  return out;
}

int run(const std::string& command, const Options& opt) {
  const ExperimentConfig cfg = load(opt);
  if (opt.format == "csv" && command != "mane") throw ConfigError(0, "--format csv is only available for mane");
  Json out;
  if (command == "beta") {
    out = cmd_beta(cfg);
  } else if (command == "subaction") {
    static const std::map<std::string, SubactionKind> kinds{
        {"maximal", SubactionKind::maximal}, {"calibrated", SubactionKind::calibrated}, {"u0", SubactionKind::u0}};
    out = cmd_subaction(cfg, kinds.at(opt.kind));
  } else if (command == "mane") {
    if (opt.format == "csv") {
      emit(opt, mane_csv(cfg));
      return 0;
    }
    out = cmd_mane(cfg);
  } else if (command == "classify") {
    std::vector<Rational> f;
    if (!opt.boundary.empty()) f = parse_boundary(opt.boundary);
    else if (cfg.boundary) f = *cfg.boundary;
    else throw ConfigError(0, "classify needs --boundary or a [boundary] section");
    out = cmd_classify(cfg, f);
  } else if (command == "alpha") {
    out = cmd_alpha(cfg);
  } else if (command == "check") {
    out = cmd_check(cfg);
  } else if (command == "bench") {
    out = cmd_bench(cfg, opt.repeats);
    out["seed"] = cfg.solver.seed;
  }
  emit(opt, out.dump(2) + "\n");
  if (command == "check" && !out["all_pass"].get<bool>()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ergodic optimization on subshifts of finite type"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "experiment configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "write the report to this file instead of stdout");
    sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--schedule", opt.k_max, "discount schedule length k_max (rho_k = 1 - 2^-k)");
    sub->add_option("--seed", opt.seed, "seed recorded with the run");
  };

  std::map<std::string, CLI::App*> subs;
  subs["beta"] = app.add_subcommand("beta", "beta by Karp, parametric search and LP");
  subs["subaction"] = app.add_subcommand("subaction", "maximal, calibrated or u0 sub-action");
  subs["subaction"]
      ->add_option("kind", opt.kind, "maximal | calibrated | u0")
      ->check(CLI::IsMember({"maximal", "calibrated", "u0"}));
  subs["mane"] = app.add_subcommand("mane", "Mane matrix, critical classes and critical edges");
  subs["classify"] = app.add_subcommand("classify", "calibrated sub-action from boundary data");
  subs["classify"]->add_option("--boundary", opt.boundary, "one value per critical class, e.g. \"0 1/2\"");
  subs["alpha"] = app.add_subcommand("alpha", "alpha(c), trajectory averages and constrained beta");
  subs["check"] = app.add_subcommand("check", "invariant suite with oracles");
  subs["bench"] = app.add_subcommand("bench", "time the beta algorithms");
  subs["bench"]->add_option("--repeats", opt.repeats, "repetitions per algorithm")->check(CLI::PositiveNumber);
  for (auto& [name, sub] : subs) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    return run(command, opt);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const NonConvergence& e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const NotTransitive& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const HypothesisFails& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const NotInOmega& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const ClassCountMismatch& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const InfeasibleTarget& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

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


#include <catch_amalgamated.hpp>

#include <string>

#include "holonomic/config.hpp"
#include "holonomic/reports.hpp"
#include "support/fixtures.hpp"

using namespace holonomic;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

const std::string kMinimal =
    "[system]\n"
    "alphabet_size = 2\n"
    "[potential]\n"
    "past_depth = 1\n"
    "future_depth = 1\n";

int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  FAIL("expected a ConfigError");
  return -1;
}

}  // namespace

TEST_CASE("fixture configs parse to the test instances") {
  auto f1 = load_config(fixture("f1.cfg"));
  CHECK(f1.potential.table() == fixtures::f1().potential.table());
  CHECK(f1.system.transition() == fixtures::full2().transition());
  CHECK(load_config(fixture("f3.cfg")).potential.table() == fixtures::f3().potential.table());
  CHECK(load_config(fixture("f6.cfg")).potential.table() == fixtures::f6().potential.table());
  CHECK(load_config(fixture("tail_counterexample.cfg")).potential.table() ==
        fixtures::tail_counterexample().potential.table());
  auto gq2 = load_config(fixture("golden_mean_q2.cfg"));
  CHECK(gq2.system.transition() == fixtures::golden().transition());
  CHECK(gq2.potential.table() == fixtures::golden_q2().potential.table());

  auto f5 = load_config(fixture("f5.cfg"));
  REQUIRE(f5.boundary);
  CHECK(*f5.boundary == std::vector<Rational>{Rational(0), Rational(1)});

  auto alpha_cfg = load_config(fixture("f5_alpha.cfg"));
  REQUIRE(alpha_cfg.constraints.components.size() == 1);
  CHECK(alpha_cfg.constraints.multiplier == std::vector<Rational>{Rational(1)});
  CHECK(alpha_cfg.constraints.target == std::vector<Rational>{Rational(1, 2)});

  auto golden = load_config(fixture("golden_mean.cfg"));
  CHECK(golden.symbol_base == 1);
  CHECK(golden.potential.at({1, 0}) == Rational(1));
}

TEST_CASE("solver section") {
  auto cfg = parse_config(kMinimal + "[solver]\nk_max = 12\nouter_stop = 1e-8\nseed = 7\n");
  CHECK(cfg.solver.k_max == 12);
  CHECK(cfg.solver.seed == 7);
  CHECK(cfg.solver.schedule().rho_list.size() == 12);
  CHECK(cfg.solver.schedule().rho_list.back() == Rational(1) - Rational(1, 4096));
}

TEST_CASE("configuration errors carry line numbers") {
  CHECK_THROWS_AS(load_config(fixture("broken.cfg")), ConfigError);
  CHECK_THROWS_AS(load_config(fixture("does_not_exist.cfg")), ConfigError);
  CHECK(error_line(kMinimal + "[bogus]\n") == 6);
  CHECK(error_line(kMinimal + "colour = red\n") == 6);
  CHECK(error_line(kMinimal + "entry = 0 1 : 1\nentry = 0 1 : 2\n") == 7);
  CHECK(error_line(kMinimal + "entry = 0 1 : one\n") == 6);
  CHECK(error_line(kMinimal + "entry = 0 2 : 1\n") == 6);
  CHECK(error_line(kMinimal + "entry = 0 1 1 : 1\n") == 6);
  CHECK(error_line(kMinimal + "[solver]\nk_max = 61\n") == 7);
  CHECK(error_line(kMinimal + "no equals sign\n") == 6);
  CHECK(error_line("[system]\nalphabet_size = 2\n") == 0);
  CHECK(error_line("[system]\nrow = 1 0\nrow = 1 0\n[potential]\npast_depth = 1\nfuture_depth = 1\n") == 2);
  CHECK(error_line(kMinimal + "[targets]\nc = 1\n") == 0);
  CHECK(error_line("[system]\nalphabet_size = 2\nlambda = 3/2\n[potential]\npast_depth = 1\nfuture_depth = 1\n") >= 0);
}

TEST_CASE("cmd_beta") {
  auto out = cmd_beta(load_config(fixture("f1.cfg")));
  CHECK(out["beta"] == "1/1");
  CHECK(out["methods_agree"] == true);
  CHECK(out["witness_cycle"] == Json::array({"11"}));
  CHECK(out["certificate_max_slack"] == "0/1");
  CHECK(cmd_beta(load_config(fixture("golden_mean.cfg")))["beta"] == "1/2");
}

TEST_CASE("cmd_subaction") {
  auto f6 = load_config(fixture("f6.cfg"));
  auto maximal = cmd_subaction(f6, SubactionKind::maximal);
  CHECK(maximal["values"]["0"] == "-1/1");
  CHECK(maximal["values"]["1"] == "0/1");
  CHECK(maximal["contact_locus"].size() == 3);

  auto f1 = load_config(fixture("f1.cfg"));
  auto cal = cmd_subaction(f1, SubactionKind::calibrated);
  CHECK(cal["values"]["0"] == "0/1");
  CHECK(cal["values"]["1"] == "-1/1");
  CHECK(cal["calibration_residual"] == "0/1");
  CHECK_FALSE(cal["discount_trace"].empty());

  auto u0 = cmd_subaction(f1, SubactionKind::u0);
  CHECK(u0["values"]["0"] == "1/1");
  CHECK(u0["values"]["1"] == "0/1");

  auto red = load_config(fixture("reducible.cfg"));
  CHECK_THROWS_AS(cmd_subaction(red, SubactionKind::calibrated), NotTransitive);
  CHECK_NOTHROW(cmd_subaction(red, SubactionKind::maximal));
}

TEST_CASE("cmd_mane and csv") {
  auto f1 = load_config(fixture("f1.cfg"));
  auto out = cmd_mane(f1);
  CHECK(out["phi"] == Json::parse(R"([["1/1","1/1"],["1/1","0/1"]])"));
  CHECK(out["critical_classes"] == Json::parse(R"([["1"]])"));
  CHECK(mane_csv(f1) == "node,0,1\n0,1/1,1/1\n1,1/1,0/1\n");

  auto red = load_config(fixture("reducible.cfg"));
  CHECK(cmd_mane(red)["phi"][0][1].is_null());
}

TEST_CASE("cmd_classify") {
  auto f5 = load_config(fixture("f5.cfg"));
  auto bad = cmd_classify(f5, {Rational(0), Rational(2)});
  CHECK(bad["compatible"] == false);
  CHECK(bad["values"]["1"] == "1/1");
  CHECK(bad["round_trip"] == false);
  auto good = cmd_classify(f5, *f5.boundary);
  CHECK(good["compatible"] == true);
  CHECK(good["round_trip"] == true);
  CHECK(good["calibration_residual"] == "0/1");
  CHECK_THROWS_AS(cmd_classify(f5, {Rational(0)}), ClassCountMismatch);
}

TEST_CASE("cmd_alpha") {
  auto out = cmd_alpha(load_config(fixture("f5_alpha.cfg")));
  CHECK(out["alpha"] == "-1/1");
  CHECK(out["trajectory_average"] == Json::array({"1/1000000"}));  // the trajectory starts at node 0
  CHECK(out["constrained_beta"] == "1/1");
  CHECK_THROWS_AS(cmd_alpha(load_config(fixture("f1.cfg"))), ConfigError);
}

TEST_CASE("cmd_check passes on the fixtures") {
  for (const char* name : {"f1.cfg", "f3.cfg", "f5.cfg", "f6.cfg", "tail_counterexample.cfg", "golden_mean.cfg",
                           "golden_mean_q2.cfg", "reducible.cfg"}) {
    auto out = cmd_check(load_config(fixture(name)));
    INFO(name << "\n" << out.dump(2));
    CHECK(out["all_pass"] == true);
  }
}

TEST_CASE("reports are byte-stable") {
  auto cfg = load_config(fixture("f6.cfg"));
  CHECK(cmd_beta(cfg).dump(2) == cmd_beta(cfg).dump(2));
  CHECK(cmd_subaction(cfg, SubactionKind::calibrated).dump(2) == cmd_subaction(cfg, SubactionKind::calibrated).dump(2));
  CHECK(cmd_mane(cfg).dump(2) == cmd_mane(cfg).dump(2));
  auto golden = load_config(fixture("golden_mean.cfg"));
  CHECK(cmd_beta(golden)["witness_cycle"] == Json::array({"21", "12"}));
}

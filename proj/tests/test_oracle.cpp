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

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace holonomic;

namespace {

Point fwd(Word pre, Word per) { return Point::forward(std::move(pre), std::move(per)); }

// Points with preperiod ≤ 1 and period ≤ 3 allowed in the system.
std::vector<Point> small_points(const SubshiftSystem& sys) {
  std::vector<Point> out;
  for (int L = 1; L <= 3; ++L)
    for (const Word& per : sys.allowed_words(L)) {
      if (!sys.allowed(per.back(), per.front())) continue;
      out.push_back(fwd({}, per));
      for (Symbol s = 0; s < sys.alphabet_size(); ++s)
        if (s != per.back() && sys.allowed(s, per.front())) out.push_back(fwd({s}, per));
    }
  return out;
}

}  // namespace

TEST_CASE("oracle_beta on fixtures") {
  auto ce = fixtures::tail_counterexample();
  CHECK(oracle_beta(ce.system, ce.potential, 3) == Rational(1));
  auto f3 = fixtures::f3();
  CHECK(oracle_beta(f3.system, f3.potential, 3) == Rational(5));
  auto f6 = fixtures::f6();
  CHECK(oracle_beta(f6.system, f6.potential, 3) == Rational(1));
  auto f1 = fixtures::f1();
  CHECK(oracle_beta(f1.system, f1.potential, 1) == Rational(1));
}

TEST_CASE("oracle_beta agrees with the graph on random small instances") {
  randinst::Generator gen(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto sys = gen.system(gen.uniform(1, 3));
    auto A = gen.potential(sys, gen.uniform(1, 2), gen.uniform(1, 2));
    auto g = build_prepend_graph(sys, A);
    CHECK(oracle_beta(sys, A, g.node_count()) == max_mean_cycle(g).beta);
  }
}

TEST_CASE("oracle_mane on fixtures") {
  auto f1 = fixtures::f1();
  CHECK(oracle_mane(f1.system, f1.potential, Rational(1), fwd({}, {1}), fwd({0}, {1}), 3, 6).value == Rational(1));
  auto f5 = fixtures::f5();
  CHECK(oracle_mane(f5.system, f5.potential, Rational(1), fwd({}, {0}), fwd({}, {1}), 3, 6).value == Rational(1));
  CHECK_THROWS_AS(oracle_mane(f1.system, f1.potential, Rational(1), fwd({}, {1}), fwd({0}, {1}), 3, 2),
                  HorizonTooSmall);
}

TEST_CASE("oracle_mane is nondecreasing in N and meets the graph value") {
  for (const auto& inst : {fixtures::f1(), fixtures::f5(), fixtures::f6(), fixtures::f3()}) {
    auto g = build_prepend_graph(inst.system, inst.potential);
    auto omega = make_omega(g);
    for (const Point& x : small_points(inst.system)) {
      if (!omega_membership(g, omega, x)) continue;
      const int N0 = static_cast<int>(x.preperiod().size() + x.period().size()) + g.depth();
      const int len = N0 + 1 + g.node_count();
      for (const Point& target : small_points(inst.system)) {
        auto graph_value = mane_potential(g, omega, x, target);
        REQUIRE(graph_value);
        Rational prev = oracle_mane(inst.system, inst.potential, omega.beta(), x, target, 0, len).value;
        for (int N = 1; N <= N0; ++N) {
          Rational cur = oracle_mane(inst.system, inst.potential, omega.beta(), x, target, N, len).value;
          CHECK(cur >= prev);
          prev = cur;
        }
        CHECK(prev == *graph_value);
      }
    }
  }
}

TEST_CASE("oracle_omega on fixtures") {
  auto f1 = fixtures::f1();
  CHECK(oracle_omega(f1.system, f1.potential, Rational(1), fwd({}, {1}), Rational(1, 8), 6));
  CHECK_FALSE(oracle_omega(f1.system, f1.potential, Rational(1), fwd({}, {0}), Rational(1, 8), 6));
}

TEST_CASE("omega_membership agrees with oracle_omega on eventually periodic points") {
  std::vector<fixtures::Instance> instances{fixtures::f1(), fixtures::f3(), fixtures::f5(), fixtures::f6()};
  randinst::Generator gen(72);
  for (int i = 0; i < 6; ++i) {
    auto sys = gen.system(2);
    instances.push_back({"random", sys, gen.potential(sys, 1, 1, 3)});
  }
  int points = 0;
  for (const auto& inst : instances) {
    auto g = build_prepend_graph(inst.system, inst.potential);
    auto omega = make_omega(g);
    for (const Point& x : small_points(inst.system)) {
      auto h = omega_horizon(inst.system, inst.potential, omega.beta(), x, g.node_count());
      INFO(inst.name << " x = " << x.str());
      CHECK(omega_membership(g, omega, x) ==
            oracle_omega(inst.system, inst.potential, omega.beta(), x, h.eps, h.max_path_len));
      ++points;
    }
  }
  CHECK(points >= 100);
}

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

PrependGraph graph_of(const fixtures::Instance& inst) { return build_prepend_graph(inst.system, inst.potential); }

Rational phi(const ManeMatrix& m, int u, int v) {
  REQUIRE(m(u, v).has_value());
  return *m(u, v);
}

}  // namespace

TEST_CASE("prepend graph shape") {
  auto g1 = graph_of(fixtures::f1());
  CHECK(g1.node_count() == 2);
  REQUIRE(g1.edge_count() == 4);
  std::vector<Rational> w;
  for (const auto& e : g1.edges()) w.push_back(e.weight);
  CHECK(w == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});

  auto gm = build_prepend_graph(fixtures::golden(), LocallyConstantPotential(fixtures::golden(), 1, 1));
  CHECK(gm.node_count() == 2);
  CHECK(gm.edge_count() == 3);

  auto g2 = build_prepend_graph(fixtures::full2(), LocallyConstantPotential(fixtures::full2(), 1, 2));
  CHECK(g2.node_count() == 4);
  CHECK(g2.edge_count() == 8);
}

TEST_CASE("prepend graph invariants on random systems") {
  randinst::Generator gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = gen.system(gen.uniform(1, 4));
    const int q = gen.uniform(1, 3);
    auto g = build_prepend_graph(sys, gen.potential(sys, 1, q));
    CHECK(g.edge_count() == static_cast<int>(sys.allowed_words(q + 1).size()));
    for (int v = 0; v < g.node_count(); ++v) {
      CHECK(!g.out_edges(v).empty());
      CHECK(!g.in_edges(v).empty());
    }
    for (const auto& e : g.edges()) {
      Word target(e.key.begin(), e.key.end() - 1);
      CHECK(g.node(e.tgt) == target);
      CHECK(sys.allowed_word(target));
    }
  }
}

TEST_CASE("max_mean_cycle on fixtures") {
  auto r1 = max_mean_cycle(graph_of(fixtures::f1()));
  CHECK(r1.beta == Rational(1));
  auto g1 = graph_of(fixtures::f1());
  REQUIRE(r1.witness_cycle.size() == 1);
  CHECK(g1.edge(r1.witness_cycle[0]).src == 1);
  CHECK(g1.edge(r1.witness_cycle[0]).tgt == 1);

  CHECK(max_mean_cycle(graph_of(fixtures::f3())).beta == Rational(5));

  auto g6 = graph_of(fixtures::f6());
  auto r6 = max_mean_cycle(g6);
  CHECK(r6.beta == Rational(1));
  REQUIRE(r6.witness_cycle.size() == 1);
  CHECK(g6.edge(r6.witness_cycle[0]).src == 1);
}

TEST_CASE("parametric_beta on fixtures") {
  CHECK(parametric_beta(graph_of(fixtures::f1())) == Rational(1));
  CHECK(parametric_beta(graph_of(fixtures::f3())) == Rational(5));
  CHECK(parametric_beta(graph_of(fixtures::f5())) == Rational(1));
}

TEST_CASE("Mane matrix on fixtures") {
  auto m1 = min_cost_all_pairs(graph_of(fixtures::f1()), Rational(1));
  CHECK(phi(m1, 0, 1) == Rational(1));
  CHECK(phi(m1, 1, 1) == Rational(0));
  CHECK(phi(m1, 1, 0) == Rational(1));
  CHECK(phi(m1, 0, 0) == Rational(1));

  auto m3 = min_cost_all_pairs(graph_of(fixtures::f3()), Rational(5));
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) CHECK(phi(m3, u, v) == Rational(0));

  auto m6 = min_cost_all_pairs(graph_of(fixtures::f6()), Rational(1));
  CHECK(phi(m6, 0, 1) == Rational(-1));
  CHECK(phi(m6, 1, 1) == Rational(0));
  CHECK(phi(m6, 0, 0) == Rational(0));
  CHECK(phi(m6, 1, 0) == Rational(1));

  CHECK_THROWS_AS(min_cost_all_pairs(graph_of(fixtures::f1()), Rational(1, 2)), NegativeCycle);
}

TEST_CASE("critical structure on fixtures") {
  auto g1 = graph_of(fixtures::f1());
  auto c1 = critical_structure(g1, Rational(1));
  REQUIRE(c1.class_count() == 1);
  CHECK(c1.classes[0] == std::vector<int>{1});
  REQUIRE(c1.critical_edge_ids().size() == 1);
  CHECK(g1.edge(c1.critical_edge_ids()[0]).key == Word{1, 1});

  auto c5 = critical_structure(graph_of(fixtures::f5()), Rational(1));
  REQUIRE(c5.class_count() == 2);
  CHECK(c5.classes[0] == std::vector<int>{0});
  CHECK(c5.classes[1] == std::vector<int>{1});

  auto g3 = graph_of(fixtures::f3());
  auto c3 = critical_structure(g3, Rational(5));
  CHECK(c3.class_count() == 1);
  CHECK(static_cast<int>(c3.critical_edge_ids().size()) == g3.edge_count());
}

TEST_CASE("Karp, parametric search and min mean on random graphs") {
  randinst::Generator gen(32);
  for (int trial = 0; trial < 120; ++trial) {
    auto sys = gen.system(gen.uniform(1, 4));
    auto g = build_prepend_graph(sys, gen.potential(sys, 1, gen.uniform(1, 2)));
    auto karp = max_mean_cycle(g);
    CHECK(parametric_beta(g) == karp.beta);
    CHECK(cycle_mean(g, karp.witness_cycle) == karp.beta);
    CHECK(min_mean_cycle(g) <= karp.beta);
    CHECK(!detail::has_cycle_above(g, karp.beta));
  }
}

TEST_CASE("Mane matrix and critical structure invariants on random graphs") {
  randinst::Generator gen(33);
  for (int trial = 0; trial < 60; ++trial) {
    auto sys = gen.system(gen.uniform(1, 3));
    auto g = build_prepend_graph(sys, gen.potential(sys, 1, gen.uniform(1, 2)));
    const Rational beta = max_mean_cycle(g).beta;
    auto m = min_cost_all_pairs(g, beta);
    auto cs = critical_structure(g, m);
    const int n = g.node_count();
    for (int a = 0; a < n; ++a) {
      if (m(a, a)) CHECK(*m(a, a) >= Rational(0));
      CHECK(static_cast<bool>(cs.critical_node[a]) == (m(a, a) && m(a, a)->is_zero()));
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (m(a, b) && m(b, c)) {
            REQUIRE(m(a, c));
            CHECK(*m(a, c) <= *m(a, b) + *m(b, c));
          }
    }
    // Critical edges stay inside one class; the critical subgraph has only mean-β cycles.
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (cs.critical_edge[e]) {
        CHECK(cs.node_class[ed.src] >= 0);
        CHECK(cs.node_class[ed.src] == cs.node_class[ed.tgt]);
      }
    }
    for (int cls = 0; cls < cs.class_count(); ++cls) {
      std::vector<char> mask(g.edge_count(), 0);
      for (int e = 0; e < g.edge_count(); ++e)
        mask[e] = cs.critical_edge[e] && cs.node_class[g.edge(e).src] == cls;
      auto cyc = canonical_cycle(g, mask);
      REQUIRE(!cyc.empty());
      CHECK(cycle_mean(g, cyc) == beta);
    }
    // Restricting to critical edges: max and min cycle means both equal β.
    for (int cls = 0; cls < cs.class_count(); ++cls) {
      for (int e = 0; e < g.edge_count(); ++e)
        if (cs.critical_edge[e] && cs.node_class[g.edge(e).src] == cls) {
          const auto& ed = g.edge(e);
          REQUIRE(m(ed.tgt, ed.src));
          CHECK(beta - ed.weight + *m(ed.tgt, ed.src) == Rational(0));
        }
    }
  }
}

TEST_CASE("canonical cycle prefers short cycles from small nodes") {
  auto g = graph_of(fixtures::f3());
  std::vector<char> all(g.edge_count(), 1);
  auto cyc = canonical_cycle(g, all);
  REQUIRE(cyc.size() == 1);
  CHECK(g.edge(cyc[0]).src == 0);
  CHECK(canonical_cycle(g, std::vector<char>(g.edge_count(), 0)).empty());
}

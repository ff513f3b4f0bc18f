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

// Holonomic measures at cylinder resolution and the optimization problems
// over them.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/graph.hpp"
#include "holonomic/mane.hpp"
#include "holonomic/potential.hpp"
#include "holonomic/simplex.hpp"

namespace holonomic {

/// Probability edge flow, indexed by edge id.
struct CirculationMeasure {
  std::vector<Rational> mass;

  std::vector<int> support() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < mass.size(); ++e)
      if (!mass[e].is_zero()) out.push_back(static_cast<int>(e));
    return out;
  }

  friend bool operator==(const CirculationMeasure&, const CirculationMeasure&) = default;
};

inline bool is_circulation(const PrependGraph& graph, const CirculationMeasure& m) {
  if (static_cast<int>(m.mass.size()) != graph.edge_count()) return false;
  Rational total(0);
  std::vector<Rational> balance(graph.node_count(), Rational(0));
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (m.mass[e] < Rational(0)) return false;
    total += m.mass[e];
    balance[graph.edge(e).src] += m.mass[e];
    balance[graph.edge(e).tgt] -= m.mass[e];
  }
  if (total != Rational(1)) return false;
  for (const Rational& b : balance)
    if (!b.is_zero()) return false;
  return true;
}

inline Rational integral(const PrependGraph& graph, const CirculationMeasure& m) {
  Rational out(0);
  for (int e = 0; e < graph.edge_count(); ++e)
    if (!m.mass[e].is_zero()) out += m.mass[e] * graph.edge(e).weight;
  return out;
}

/// The support is one simple cycle carrying equal mass on every edge.
/// On success `cycle` receives the edges in traversal order.
inline bool is_uniform_cycle(const PrependGraph& graph, const CirculationMeasure& m,
                             std::vector<int>* cycle = nullptr) {
  const std::vector<int> supp = m.support();
  if (supp.empty()) return false;
  for (int e : supp)
    if (m.mass[e] != m.mass[supp.front()]) return false;
  std::map<int, int> next;
  std::map<int, int> indeg;
  for (int e : supp) {
    if (!next.emplace(graph.edge(e).src, e).second) return false;
    if (++indeg[graph.edge(e).tgt] > 1) return false;
  }
  std::vector<int> order;
  int v = graph.edge(supp.front()).src;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    auto it = next.find(v);
    if (it == next.end()) return false;
    order.push_back(it->second);
    v = graph.edge(it->second).tgt;
  }
  if (v != graph.edge(supp.front()).src) return false;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (cycle) *cycle = order;
  return true;
}

inline CirculationMeasure cycle_measure(const PrependGraph& graph, const std::vector<int>& cycle) {
  CirculationMeasure m{std::vector<Rational>(graph.edge_count(), Rational(0))};
  const Rational share(1, static_cast<std::int64_t>(cycle.size()));
  for (int e : cycle) m.mass[e] += share;
  return m;
}

/// Periodic orbit (x_0 … x_{M−1})^∞ with one past window per step.
///
/// tails[j] is y^j_{p−1} … y^j_0 (window order) with anchor
/// y^j_0 = x_{(j−1) mod M}.
struct DecoratedOrbitMeasure {
  Word orbit;
  std::vector<Word> tails;
  Rational weight{1};
};

inline bool is_holonomic(const SubshiftSystem& system, const DecoratedOrbitMeasure& m) {
  const std::size_t M = m.orbit.size();
  if (M == 0 || m.tails.size() != M || m.weight <= Rational(0)) return false;
  if (!system.allowed_word(m.orbit) || !system.allowed(m.orbit.back(), m.orbit.front())) return false;
  const std::size_t p = m.tails.front().size();
  for (std::size_t j = 0; j < M; ++j) {
    const Word& t = m.tails[j];
    if (t.size() != p || p == 0 || !system.allowed_word(t)) return false;
    if (t.back() != m.orbit[(j + M - 1) % M]) return false;
  }
  return true;
}

inline bool is_holonomic(const SubshiftSystem& system, const std::vector<DecoratedOrbitMeasure>& mixture) {
  if (mixture.empty()) return false;
  Rational total(0);
  for (const auto& m : mixture) {
    if (!is_holonomic(system, m)) return false;
    total += m.weight;
  }
  return total == Rational(1);
}

namespace detail {

inline Word orbit_window(const Word& orbit, std::size_t start, std::size_t len) {
  Word out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = orbit[(start + i) % orbit.size()];
  return out;
}

}  // namespace detail

/// Average of A over one decorated orbit (unweighted).
inline Rational orbit_average(const LocallyConstantPotential& A, const DecoratedOrbitMeasure& m) {
  const std::size_t M = m.orbit.size();
  Rational sum(0);
  for (std::size_t j = 0; j < M; ++j) {
    if (static_cast<int>(m.tails[j].size()) != A.past_depth())
      throw std::invalid_argument("tail length differs from the past depth of the potential");
    Word w = m.tails[j];
    Word x = detail::orbit_window(m.orbit, j, static_cast<std::size_t>(A.future_depth()));
    w.insert(w.end(), x.begin(), x.end());
    sum += A.at(w);
  }
  return sum / Rational(static_cast<std::int64_t>(M));
}

inline Rational integral(const LocallyConstantPotential& A, const DecoratedOrbitMeasure& m) {
  return orbit_average(A, m);
}

inline Rational integral(const LocallyConstantPotential& A, const std::vector<DecoratedOrbitMeasure>& mixture) {
  Rational out(0);
  for (const auto& m : mixture) out += m.weight * orbit_average(A, m);
  return out;
}

inline bool is_maximizing(const SubshiftSystem& system, const std::vector<DecoratedOrbitMeasure>& mixture,
                          const LocallyConstantPotential& A, const Rational& beta) {
  if (!is_holonomic(system, mixture)) throw NotHolonomic("measure is not holonomic");
  return integral(A, mixture) == beta;
}

inline bool is_maximizing(const SubshiftSystem& system, DecoratedOrbitMeasure m, const LocallyConstantPotential& A,
                          const Rational& beta) {
  m.weight = Rational(1);
  return is_maximizing(system, std::vector<DecoratedOrbitMeasure>{m}, A, beta);
}

/// x-cylinder flow of a decorated mixture on the depth-q graph.
inline CirculationMeasure orbit_circulation(const PrependGraph& graph,
                                            const std::vector<DecoratedOrbitMeasure>& mixture) {
  CirculationMeasure c{std::vector<Rational>(graph.edge_count(), Rational(0))};
  const auto q = static_cast<std::size_t>(graph.depth());
  for (const auto& m : mixture) {
    const std::size_t M = m.orbit.size();
    const Rational share = m.weight / Rational(static_cast<std::int64_t>(M));
    for (std::size_t j = 0; j < M; ++j)
      c.mass[graph.edge_by_key(detail::orbit_window(m.orbit, j + M - 1, q + 1))] += share;
  }
  return c;
}

/// Circulations of integral β are exactly those supported on critical edges.
struct MaximizingFace {
  Rational beta;
  std::vector<char> allowed_edges;

  bool contains(const CirculationMeasure& m) const {
    for (std::size_t e = 0; e < m.mass.size(); ++e)
      if (!m.mass[e].is_zero() && !allowed_edges[e]) return false;
    return true;
  }
};

inline MaximizingFace maximizing_face(const PrependGraph& graph, const Rational& beta) {
  return {beta, critical_structure(graph, beta).critical_edge};
}

/// Face test: x-flow inside the face and every tail optimal for its step.
inline bool in_maximizing_face(const PrependGraph& graph, const MaximizingFace& face,
                               const std::vector<DecoratedOrbitMeasure>& mixture) {
  if (!face.contains(orbit_circulation(graph, mixture))) return false;
  const auto q = static_cast<std::size_t>(graph.depth());
  for (const auto& m : mixture) {
    const std::size_t M = m.orbit.size();
    for (std::size_t j = 0; j < M; ++j) {
      Word key = detail::orbit_window(m.orbit, j + M - 1, q + 1);
      Word tail(m.tails[j].begin(), m.tails[j].end() - 1);
      if (!graph.reduced().tail_is_optimal(key, tail)) return false;
    }
  }
  return true;
}

namespace detail {

inline LpSolution circulation_lp(const PrependGraph& graph, const std::vector<Rational>& objective,
                                 const std::vector<std::vector<Rational>>& extra_rows,
                                 const std::vector<Rational>& extra_rhs) {
  const int n = graph.node_count(), m = graph.edge_count();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> row(m, Rational(0));
    for (int e : graph.out_edges(v)) row[e] += Rational(1);
    for (int e : graph.in_edges(v)) row[e] -= Rational(1);
    A.push_back(std::move(row));
    b.emplace_back(0);
  }
  A.emplace_back(m, Rational(1));
  b.emplace_back(1);
  for (std::size_t i = 0; i < extra_rows.size(); ++i) {
    A.push_back(extra_rows[i]);
    b.push_back(extra_rhs[i]);
  }
  return solve_lp(std::move(A), std::move(b), objective);
}

inline std::vector<Rational> edge_weights(const PrependGraph& graph) {
  std::vector<Rational> w;
  for (const Edge& e : graph.edges()) w.push_back(e.weight);
  return w;
}

}  // namespace detail

/// max Σ mass·weight over the circulation polytope, with an optimal vertex.
inline std::pair<Rational, CirculationMeasure> beta_lp(const PrependGraph& graph) {
  LpSolution sol = detail::circulation_lp(graph, detail::edge_weights(graph), {}, {});
  if (sol.status != LpStatus::optimal) throw std::logic_error("circulation LP must have an optimum");
  return {sol.value, CirculationMeasure{sol.x}};
}

/// φ_i on edges: φ_i(s | x_0 … x_{q_i−1}), needing past depth 1 and q_i ≤ q.
inline std::vector<std::vector<Rational>> constraint_edge_values(const PrependGraph& graph,
                                                                 const ConstraintSpec& spec) {
  std::vector<std::vector<Rational>> out;
  for (const auto& phi : spec.components) {
    if (phi.past_depth() != 1) throw InvalidPotential("constraint components must have past depth 1");
    if (phi.future_depth() > graph.depth())
      throw InvalidPotential("constraint future depth exceeds the graph depth");
    std::vector<Rational> row;
    for (const Edge& e : graph.edges()) row.push_back(phi.at(Word(e.key.begin(), e.key.begin() + 1 + phi.future_depth())));
    out.push_back(std::move(row));
  }
  return out;
}

/// β_{A,φ}(h): the circulation LP with Σ mass·φ_i = h_i added.
inline Rational constrained_beta(const PrependGraph& graph, const ConstraintSpec& spec) {
  if (!spec.target) throw std::invalid_argument("constrained_beta needs a target vector");
  if (spec.target->size() != spec.components.size())
    throw std::invalid_argument("target dimension differs from the number of constraints");
  LpSolution sol =
      detail::circulation_lp(graph, detail::edge_weights(graph), constraint_edge_values(graph, spec), *spec.target);
  if (sol.status == LpStatus::infeasible) throw InfeasibleTarget("target lies outside the image of the circulation polytope");
  return sol.value;
}

/// Graph with weights Ā − ⟨c, φ⟩.
inline PrependGraph tilted_graph(const PrependGraph& graph, const ConstraintSpec& spec,
                                 const std::vector<Rational>& c) {
  if (c.size() != spec.components.size())
    throw std::invalid_argument("multiplier dimension differs from the number of constraints");
  const auto phi = constraint_edge_values(graph, spec);
  std::vector<Rational> w = detail::edge_weights(graph);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t e = 0; e < w.size(); ++e) w[e] -= c[i] * phi[i][e];
  return graph.with_weights(w);
}

/// α(c) = −β_{A − ⟨c, φ⟩}.
inline Rational alpha(const PrependGraph& graph, const ConstraintSpec& spec, const std::vector<Rational>& c) {
  return -max_mean_cycle(tilted_graph(graph, spec, c)).beta;
}

inline Rational alpha(const PrependGraph& graph, const ConstraintSpec& spec) {
  if (!spec.multiplier) throw std::invalid_argument("alpha needs a multiplier vector");
  return alpha(graph, spec, *spec.multiplier);
}

/// Birkhoff average of φ over K steps of the trajectory that always follows
/// a tight edge of u₀ for A − ⟨c, φ⟩ (smallest symbol first).
inline std::vector<Rational> optimal_trajectory_average(const PrependGraph& graph, const ConstraintSpec& spec,
                                                        const std::vector<Rational>& c, std::int64_t K,
                                                        int start = 0) {
  if (K < 1) throw std::invalid_argument("trajectory length must be positive");
  const PrependGraph tilted = tilted_graph(graph, spec, c);
  const Rational beta = max_mean_cycle(tilted).beta;
  const OmegaSet omega = make_omega(tilted, beta);
  const ExactFunction u = maximal_calibrated(tilted, omega);

  std::vector<int> next_edge(tilted.node_count(), -1);
  for (int v = 0; v < tilted.node_count(); ++v)
    for (int e : tilted.out_edges(v)) {  // out edges are in symbol order
      const Edge& ed = tilted.edge(e);
      if (u[v] == u[ed.tgt] - ed.weight + beta) {
        next_edge[v] = e;
        break;
      }
    }

  std::vector<std::int64_t> visits(tilted.edge_count(), 0);
  int v = start;
  for (std::int64_t step = 0; step < K; ++step) {
    const int e = next_edge[v];
    ++visits[e];
    v = tilted.edge(e).tgt;
  }
  const auto phi = constraint_edge_values(graph, spec);
  std::vector<Rational> out;
  for (const auto& row : phi) {
    Rational sum(0);
    for (std::size_t e = 0; e < row.size(); ++e)
      if (visits[e]) sum += row[e] * Rational(visits[e]);
    out.push_back(sum / Rational(K));
  }
  return out;
}

/// Every edge of the extreme maximizing measure is critical.
inline bool support_in_omega_check(const PrependGraph& graph, const CirculationMeasure& m, const OmegaSet& omega) {
  if (!is_uniform_cycle(graph, m)) throw NotExtreme("measure is not uniform on a single cycle");
  for (int e : m.support())
    if (!omega.critical.critical_edge[e]) return false;
  return true;
}

}  // namespace holonomic

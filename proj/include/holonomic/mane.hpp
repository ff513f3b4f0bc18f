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

// The non-wandering set, the Mañé potential and the classification of
// calibrated sub-actions by their values on critical classes.

#pragma once

#include <optional>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/graph.hpp"
#include "holonomic/node_function.hpp"
#include "holonomic/subaction.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

struct OmegaSet {
  ManeMatrix phi;
  CriticalStructure critical;

  const Rational& beta() const { return critical.beta; }
};

inline OmegaSet make_omega(const PrependGraph& graph, const Rational& beta) {
  ManeMatrix phi = min_cost_all_pairs(graph, beta);
  CriticalStructure cs = critical_structure(graph, phi);
  return {std::move(phi), std::move(cs)};
}

inline OmegaSet make_omega(const PrependGraph& graph) { return make_omega(graph, max_mean_cycle(graph).beta); }

/// Edge ids W_{j+1}(x) → W_j(x) for j over the preperiod and one period.
inline std::vector<int> window_edges(const PrependGraph& graph, const Point& x) {
  validate_point(graph.system(), x);
  const std::size_t q = static_cast<std::size_t>(graph.depth());
  const std::size_t span = x.preperiod().size() + x.period().size();
  std::vector<int> out;
  out.reserve(span);
  for (std::size_t j = 0; j < span; ++j) out.push_back(graph.edge_by_key(window(x, j, q + 1)));
  return out;
}

inline bool omega_membership(const PrependGraph& graph, const OmegaSet& omega, const Point& x) {
  for (int e : window_edges(graph, x))
    if (!omega.critical.critical_edge[e]) return false;
  return true;
}

inline int node_of(const PrependGraph& graph, const Point& x) {
  return graph.index_of(window(x, 0, static_cast<std::size_t>(graph.depth())));
}

namespace detail {

// D_j offsets: node W_j(x) and the cost Σ_{i<j} c_i(x), j over one period
// after the preperiod.
inline std::vector<std::pair<int, Rational>> mane_offsets(const PrependGraph& graph, const OmegaSet& omega,
                                                          const Point& x) {
  if (!omega_membership(graph, omega, x)) throw NotInOmega("point " + x.str() + " is not in the non-wandering set");
  const std::vector<int> edges = window_edges(graph, x);
  const std::size_t pre = x.preperiod().size();
  const std::size_t q = static_cast<std::size_t>(graph.depth());
  std::vector<std::pair<int, Rational>> out;
  Rational prefix(0);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (j >= pre) out.emplace_back(graph.index_of(window(x, j, q)), prefix);
    prefix += edge_cost(graph, omega.beta(), edges[j]);
  }
  return out;
}

}  // namespace detail

/// S_A(x, ·) at node resolution: V ↦ min_j [Φ(V → W_j(x)) + Σ_{i<j} c_i(x)].
inline ExactFunction mane_family_subaction(const PrependGraph& graph, const OmegaSet& omega, const Point& x) {
  const auto offsets = detail::mane_offsets(graph, omega, x);
  ExactFunction out = graph.make_function(Rational(0));
  for (int v = 0; v < graph.node_count(); ++v) {
    std::optional<Rational> best;
    for (const auto& [w, off] : offsets) {
      const auto& phi = omega.phi(v, w);
      if (!phi) continue;
      Rational val = *phi + off;
      if (!best || val < *best) best = val;
    }
    if (!best) throw NotTransitive("node " + word_string(graph.node(v)) + " cannot reach the orbit of " + x.str());
    out[v] = *best;
  }
  return out;
}

/// S_A(x, x̄); nullopt when x̄'s node cannot reach the orbit of x.
inline std::optional<Rational> mane_potential(const PrependGraph& graph, const OmegaSet& omega, const Point& x,
                                              const Point& target) {
  validate_point(graph.system(), target);
  const auto offsets = detail::mane_offsets(graph, omega, x);
  const int v = node_of(graph, target);
  std::optional<Rational> best;
  for (const auto& [w, off] : offsets) {
    const auto& phi = omega.phi(v, w);
    if (!phi) continue;
    Rational val = *phi + off;
    if (!best || val < *best) best = val;
  }
  return best;
}

/// Values of a calibrated sub-action on the critical classes, read at each
/// class representative (its smallest node).
struct BoundaryData {
  std::vector<Rational> values;

  friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

inline BoundaryData represent(const ExactFunction& u, const PrependGraph& graph, const OmegaSet& omega) {
  if (!calibration_residual(u, graph, omega.beta()).is_zero())
    throw NotCalibrated("represent needs a calibrated sub-action");
  BoundaryData f;
  for (int c = 0; c < omega.critical.class_count(); ++c) f.values.push_back(u[omega.critical.representative(c)]);
  return f;
}

/// f(α) − f(γ) ≤ Φ(rep α → rep γ) for every ordered pair of classes.
inline bool compatible(const BoundaryData& f, const OmegaSet& omega) {
  const auto& cs = omega.critical;
  if (static_cast<int>(f.values.size()) != cs.class_count())
    throw ClassCountMismatch("boundary data has " + std::to_string(f.values.size()) + " values for " +
                             std::to_string(cs.class_count()) + " classes");
  for (int a = 0; a < cs.class_count(); ++a)
    for (int g = 0; g < cs.class_count(); ++g) {
      if (a == g) continue;
      const auto& phi = omega.phi(cs.representative(a), cs.representative(g));
      if (phi && f.values[a] - f.values[g] > *phi) return false;
    }
  return true;
}

/// u(V) = min_γ [f(γ) + Φ(V → rep γ)].
inline ExactFunction reconstruct(const BoundaryData& f, const PrependGraph& graph, const OmegaSet& omega) {
  const auto& cs = omega.critical;
  if (static_cast<int>(f.values.size()) != cs.class_count())
    throw ClassCountMismatch("boundary data has " + std::to_string(f.values.size()) + " values for " +
                             std::to_string(cs.class_count()) + " classes");
  ExactFunction u = graph.make_function(Rational(0));
  for (int v = 0; v < graph.node_count(); ++v) {
    std::optional<Rational> best;
    for (int c = 0; c < cs.class_count(); ++c) {
      const auto& phi = omega.phi(v, cs.representative(c));
      if (!phi) continue;
      Rational val = f.values[c] + *phi;
      if (!best || val < *best) best = val;
    }
    if (!best) throw NotTransitive("node " + word_string(graph.node(v)) + " reaches no critical class");
    u[v] = *best;
  }
  return u;
}

/// u₀(V) = min over critical nodes W of Φ(V → W).
inline ExactFunction maximal_calibrated(const PrependGraph& graph, const OmegaSet& omega) {
  ExactFunction u = graph.make_function(Rational(0));
  for (int v = 0; v < graph.node_count(); ++v) {
    std::optional<Rational> best;
    for (int w = 0; w < graph.node_count(); ++w) {
      if (!omega.critical.critical_node[w]) continue;
      const auto& phi = omega.phi(v, w);
      if (phi && (!best || *phi < *best)) best = *phi;
    }
    if (!best) throw NotTransitive("node " + word_string(graph.node(v)) + " reaches no critical node");
    u[v] = *best;
  }
  return u;
}

}  // namespace holonomic

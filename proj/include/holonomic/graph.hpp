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

// The depth-q prepend graph and its exact algorithms.
//
// Nodes are the allowed q-words w = (x_0, …, x_{q-1}); the edge (w, s)
// exists when M(s, x_0) = 1 and leads to τ(w) = (s, x_0, …, x_{q-2}). Its
// weight is the reduced potential Ā(s | w). Costs are c(e) = β − weight(e),
// so sub-actions are exactly the feasible potentials of the cost graph.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "holonomic/detail/digraph.hpp"
#include "holonomic/errors.hpp"
#include "holonomic/node_function.hpp"
#include "holonomic/potential.hpp"
#include "holonomic/rational.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

struct Edge {
  int src = 0;
  int tgt = 0;
  /// Prepended symbol y_0.
  Symbol symbol = 0;
  /// (q+1)-word s·w identifying the edge.
  Word key;
  Rational weight;
};

class PrependGraph {
 public:
  PrependGraph(SubshiftSystem system, ReducedPotential reduced)
      : system_(std::move(system)), reduced_(std::move(reduced)) {
    const int q = reduced_.future_depth;
    if (q < 1) throw std::invalid_argument("future depth must be at least 1");
    nodes_ = system_.allowed_words(q);
    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
      const Word& w = nodes_[v];
      for (Symbol s = 0; s < system_.alphabet_size(); ++s) {
        if (!system_.allowed(s, w.front())) continue;
        Word key{s};
        key.insert(key.end(), w.begin(), w.end());
        Word target(key.begin(), key.end() - 1);
        Edge e{v, index_of(target), s, key, reduced_.at(key)};
        out_[v].push_back(static_cast<int>(edges_.size()));
        in_[e.tgt].push_back(static_cast<int>(edges_.size()));
        edges_.push_back(std::move(e));
      }
    }
  }

  const SubshiftSystem& system() const { return system_; }
  const ReducedPotential& reduced() const { return reduced_; }
  int depth() const { return reduced_.future_depth; }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Word>& nodes() const { return nodes_; }
  const Word& node(int v) const { return nodes_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  int index_of(const Word& w) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), w);
    if (it == nodes_.end() || *it != w)
      throw std::out_of_range("word " + word_string(w) + " is not a node");
    return static_cast<int>(it - nodes_.begin());
  }

  std::optional<int> edge_between(int u, int v) const {
    for (int e : out_[u])
      if (edges_[e].tgt == v) return e;
    return std::nullopt;
  }

  int edge_by_key(const Word& key) const {
    Word w(key.begin() + 1, key.end());
    int v = index_of(w);
    for (int e : out_[v])
      if (edges_[e].symbol == key.front()) return e;
    throw std::out_of_range("no edge with key " + word_string(key));
  }

  /// Same topology, new weights (indexed by edge id).
  PrependGraph with_weights(const std::vector<Rational>& weights) const {
    if (weights.size() != edges_.size()) throw std::invalid_argument("weight count mismatch");
    PrependGraph out = *this;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      out.edges_[e].weight = weights[e];
      out.reduced_.edge_table[edges_[e].key] = weights[e];
    }
    return out;
  }

  PrependGraph negated() const {
    std::vector<Rational> w;
    for (const Edge& e : edges_) w.push_back(-e.weight);
    return with_weights(w);
  }

  /// The same potential on the depth-`depth` graph.
  PrependGraph refined(int depth) const {
    return PrependGraph(system_, pad_future(system_, reduced_, depth));
  }

  detail::Adjacency adjacency() const {
    detail::Adjacency adj(nodes_.size());
    for (const Edge& e : edges_) adj[e.src].push_back(e.tgt);
    return adj;
  }

  template <typename Scalar>
  NodeFunction<Scalar> make_function(Scalar fill) const {
    return NodeFunction<Scalar>(nodes_, fill);
  }

 private:
  SubshiftSystem system_;
  ReducedPotential reduced_;
  std::vector<Word> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

inline PrependGraph build_prepend_graph(const SubshiftSystem& system, const ReducedPotential& reduced) {
  return PrependGraph(system, reduced);
}

inline PrependGraph build_prepend_graph(const SubshiftSystem& system,
                                        const LocallyConstantPotential& A) {
  return PrependGraph(system, reduce_past(A));
}

enum class BetaMethod { karp, parametric, lp, oracle };

inline const char* to_string(BetaMethod m) {
  switch (m) {
    case BetaMethod::karp: return "karp";
    case BetaMethod::parametric: return "parametric";
    case BetaMethod::lp: return "lp";
    case BetaMethod::oracle: return "oracle";
  }
  return "?";
}

struct BetaResult {
  Rational beta;
  std::vector<int> witness_cycle;  // edge ids, starting at the smallest node
  BetaMethod method = BetaMethod::karp;
};

/// Minimum c-cost over nonempty paths; nullopt when no path exists.
struct ManeMatrix {
  Rational beta;
  std::vector<std::vector<std::optional<Rational>>> phi;

  const std::optional<Rational>& operator()(int u, int v) const { return phi[u][v]; }
  int size() const { return static_cast<int>(phi.size()); }
};

struct CriticalStructure {
  Rational beta;
  std::vector<char> critical_node;
  std::vector<char> critical_edge;
  /// Critical classes, each sorted; classes ordered by smallest member.
  std::vector<std::vector<int>> classes;
  /// Class id per node, −1 off the critical set.
  std::vector<int> node_class;

  int class_count() const { return static_cast<int>(classes.size()); }
  int representative(int cls) const { return classes[cls].front(); }
  std::vector<int> critical_edge_ids() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < critical_edge.size(); ++e)
      if (critical_edge[e]) out.push_back(static_cast<int>(e));
    return out;
  }
};

inline Rational cycle_mean(const PrependGraph& graph, const std::vector<int>& cycle) {
  Rational sum(0);
  for (int e : cycle) sum += graph.edge(e).weight;
  return sum / Rational(static_cast<std::int64_t>(cycle.size()));
}

inline Rational edge_cost(const PrependGraph& graph, const Rational& beta, int e) {
  return beta - graph.edge(e).weight;
}

inline ManeMatrix min_cost_all_pairs(const PrependGraph& graph, const Rational& beta) {
  const int n = graph.node_count();
  ManeMatrix m{beta, std::vector<std::vector<std::optional<Rational>>>(
                         n, std::vector<std::optional<Rational>>(n))};
  auto& phi = m.phi;
  for (const Edge& e : graph.edges()) {
    Rational c = beta - e.weight;
    if (!phi[e.src][e.tgt] || c < *phi[e.src][e.tgt]) phi[e.src][e.tgt] = c;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!phi[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!phi[k][j]) continue;
        Rational via = *phi[i][k] + *phi[k][j];
        if (!phi[i][j] || via < *phi[i][j]) phi[i][j] = via;
      }
    }
  for (int v = 0; v < n; ++v)
    if (phi[v][v] && *phi[v][v] < Rational(0))
      throw NegativeCycle("beta " + beta.str() + " is below the maximal cycle mean");
  return m;
}

inline CriticalStructure critical_structure(const PrependGraph& graph, const ManeMatrix& phi) {
  const int n = graph.node_count();
  CriticalStructure cs;
  cs.beta = phi.beta;
  cs.critical_node.assign(n, 0);
  cs.critical_edge.assign(graph.edge_count(), 0);
  for (int v = 0; v < n; ++v) cs.critical_node[v] = phi(v, v) && phi(v, v)->is_zero();
  detail::Adjacency sub(n);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    const auto& back = phi(edge.tgt, edge.src);
    if (back && (phi.beta - edge.weight + *back).is_zero()) {
      cs.critical_edge[e] = 1;
      sub[edge.src].push_back(edge.tgt);
    }
  }
  int count = 0;
  auto comp = detail::strongly_connected_components(sub, &count);
  std::map<int, int> renumber;
  cs.node_class.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!cs.critical_node[v]) continue;
    auto [it, inserted] = renumber.emplace(comp[v], static_cast<int>(renumber.size()));
    if (inserted) cs.classes.emplace_back();
    cs.node_class[v] = it->second;
    cs.classes[it->second].push_back(v);
  }
  return cs;
}

inline CriticalStructure critical_structure(const PrependGraph& graph, const Rational& beta) {
  return critical_structure(graph, min_cost_all_pairs(graph, beta));
}

/// Shortest cycle made of `allowed` edges, ties broken by the node sequence
/// read from its smallest node. Empty if the allowed subgraph is acyclic.
inline std::vector<int> canonical_cycle(const PrependGraph& graph, const std::vector<char>& allowed) {
  const int n = graph.node_count();
  for (int length = 1; length <= n; ++length) {
    for (int start = 0; start < n; ++start) {
      // Distance to `start` inside nodes >= start, for pruning.
      std::vector<int> dist(n, n + 1);
      dist[start] = 0;
      std::vector<int> queue{start};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (int e : graph.in_edges(v)) {
          int u = graph.edge(e).src;
          if (!allowed[e] || u < start || dist[u] <= n) continue;
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
      std::vector<int> path;
      // Depth-first search in increasing target order.
      std::function<bool(int, int)> dfs = [&](int v, int remaining) -> bool {
        if (remaining == 0) return v == start && !path.empty();
        std::vector<int> outs = graph.out_edges(v);
        std::sort(outs.begin(), outs.end(),
                  [&](int a, int b) { return graph.edge(a).tgt < graph.edge(b).tgt; });
        for (int e : outs) {
          int w = graph.edge(e).tgt;
          if (!allowed[e] || w < start || dist[w] > remaining - 1) continue;
          if (w == start && remaining != 1) continue;
          path.push_back(e);
          if (dfs(w, remaining - 1)) return true;
          path.pop_back();
        }
        return false;
      };
      if (dfs(start, length)) return path;
    }
  }
  return {};
}

/// Karp's dynamic program: exact β with a canonical witness cycle.
inline BetaResult max_mean_cycle(const PrependGraph& graph) {
  const int n = graph.node_count();
  std::vector<std::vector<std::optional<Rational>>> D(n + 1, std::vector<std::optional<Rational>>(n));
  for (int v = 0; v < n; ++v) D[0][v] = Rational(0);
  for (int k = 0; k < n; ++k)
    for (const Edge& e : graph.edges()) {
      if (!D[k][e.src]) continue;
      Rational cand = *D[k][e.src] + e.weight;
      if (!D[k + 1][e.tgt] || cand > *D[k + 1][e.tgt]) D[k + 1][e.tgt] = cand;
    }
  std::optional<Rational> beta;
  for (int v = 0; v < n; ++v) {
    if (!D[n][v]) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      if (!D[k][v]) continue;
      Rational mean = (*D[n][v] - *D[k][v]) / Rational(n - k);
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!beta || *worst > *beta)) beta = worst;
  }
  if (!beta) throw std::logic_error("prepend graph has no cycle");
  BetaResult out{*beta, {}, BetaMethod::karp};
  out.witness_cycle = canonical_cycle(graph, critical_structure(graph, *beta).critical_edge);
  return out;
}

namespace detail {

/// Bellman–Ford from a virtual source: does some cycle have mean > b?
inline bool has_cycle_above(const PrependGraph& graph, const Rational& b) {
  const int n = graph.node_count();
  std::vector<Rational> dist(n, Rational(0));
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : graph.edges()) {
      Rational cand = dist[e.src] + (b - e.weight);
      if (cand < dist[e.tgt]) {
        dist[e.tgt] = cand;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

}  // namespace detail

/// β as the least b for which the costs b − weight admit no negative cycle.
///
/// β is a cycle mean, hence of the form k/(D·L) with D the lcm of the weight
/// denominators and L ≤ |V|. Bisection on a grid of step 1/(2·D·|V|²)
/// isolates a single such candidate, which is then read off exactly.
inline Rational parametric_beta(const PrependGraph& graph) {
  const std::int64_t n = graph.node_count();
  std::int64_t D = 1;
  Rational lo = graph.edge(0).weight, hi = lo;
  for (const Edge& e : graph.edges()) {
    D = std::lcm(D, e.weight.den());
    lo = std::min(lo, e.weight);
    hi = std::max(hi, e.weight);
  }
  lo -= Rational(1);
  const std::int64_t grid = 2 * D * n * n;
  const Rational gap(1, D * n * n);
  auto floor_div = [](std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
  };
  // Invariant: some cycle has mean > lo, none has mean > hi.
  while (hi - lo >= gap) {
    Rational mid = (lo + hi) / Rational(2);
    Rational scaled = mid * Rational(grid);
    Rational snapped(floor_div(scaled.num(), scaled.den()), grid);
    if (!(lo < snapped && snapped < hi)) snapped = mid;
    if (detail::has_cycle_above(graph, snapped))
      lo = snapped;
    else
      hi = snapped;
  }
  std::optional<Rational> found;
  for (std::int64_t L = 1; L <= n; ++L) {
    Rational scaled = hi * Rational(D * L);
    Rational cand(floor_div(scaled.num(), scaled.den()), D * L);
    if (cand > lo && (!found || cand != *found)) {
      if (found) throw std::logic_error("parametric search isolated two candidates");
      found = cand;
    }
  }
  if (!found || detail::has_cycle_above(graph, *found))
    throw std::logic_error("parametric search failed to certify beta");
  return *found;
}

inline Rational min_mean_cycle(const PrependGraph& graph) {
  return -max_mean_cycle(graph.negated()).beta;
}

}  // namespace holonomic

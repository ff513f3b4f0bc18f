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

// Sub-actions: verification, the maximal one, the discounted construction of
// calibrated ones, contact loci and the refinement U_k.

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/graph.hpp"
#include "holonomic/node_function.hpp"
#include "holonomic/rational.hpp"

namespace holonomic {

namespace detail {

template <typename Scalar>
Scalar weight_as(const Rational& w) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return w;
  else
    return static_cast<Scalar>(w.to_long_double());
}

}  // namespace detail

template <typename Scalar>
struct SubactionResidual {
  Scalar max_slack;
  std::vector<int> violating_edges;
};

/// max over edges of weight + u(src) − u(tgt) − β.
template <typename Scalar>
SubactionResidual<Scalar> subaction_residual(const NodeFunction<Scalar>& u, const PrependGraph& graph,
                                             const Scalar& beta) {
  SubactionResidual<Scalar> out{Scalar(0), {}};
  bool first = true;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    Scalar slack = detail::weight_as<Scalar>(ed.weight) + u[ed.src] - u[ed.tgt] - beta;
    if (first || slack > out.max_slack) out.max_slack = slack;
    first = false;
    if (slack > Scalar(0)) out.violating_edges.push_back(e);
  }
  return out;
}

template <typename Scalar>
bool is_subaction(const NodeFunction<Scalar>& u, const PrependGraph& graph, const Scalar& beta) {
  return subaction_residual(u, graph, beta).max_slack <= Scalar(0);
}

/// max over nodes of |u(V) − min_e [u(tgt) − weight + β]|.
template <typename Scalar>
Scalar calibration_residual(const NodeFunction<Scalar>& u, const PrependGraph& graph, const Scalar& beta) {
  Scalar worst(0);
  for (int v = 0; v < graph.node_count(); ++v) {
    std::optional<Scalar> best;
    for (int e : graph.out_edges(v)) {
      const Edge& ed = graph.edge(e);
      Scalar val = u[ed.tgt] - detail::weight_as<Scalar>(ed.weight) + beta;
      if (!best || val < *best) best = val;
    }
    Scalar gap = u[v] - *best;
    if (gap < Scalar(0)) gap = -gap;
    if (gap > worst) worst = gap;
  }
  return worst;
}

/// u_A(V) = min(0, min over nonempty paths from V of Σ(β − weight)).
inline ExactFunction maximal_subaction(const PrependGraph& graph, const Rational& beta) {
  ExactFunction u = graph.make_function(Rational(0));
  const int n = graph.node_count();
  for (int round = 0; round <= n + 1; ++round) {
    bool changed = false;
    for (int v = 0; v < n; ++v)
      for (int e : graph.out_edges(v)) {
        const Edge& ed = graph.edge(e);
        Rational cand = beta - ed.weight + u[ed.tgt];
        if (cand < u[v]) {
          u[v] = cand;
          changed = true;
        }
      }
    if (!changed) return u;
  }
  throw NegativeCycle("maximal_subaction: beta is below the maximal cycle mean");
}

struct DiscountSchedule {
  std::vector<Rational> rho_list;
  long double inner_tolerance = 1e-12L;
  long double outer_stop = 1e-9L;

  /// ρ_k = 1 − 2^{−k}, k = 1 … k_max.
  static DiscountSchedule standard(int k_max = 30) {
    if (k_max < 1 || k_max > 60) throw std::invalid_argument("schedule length must lie in [1, 60]");
    DiscountSchedule s;
    for (int k = 1; k <= k_max; ++k) s.rho_list.push_back(Rational(1) - Rational(1, std::int64_t{1} << k));
    return s;
  }

  void validate() const {
    if (rho_list.empty()) throw std::invalid_argument("empty discount schedule");
    for (std::size_t i = 0; i < rho_list.size(); ++i) {
      if (rho_list[i] <= Rational(0) || rho_list[i] >= Rational(1))
        throw std::invalid_argument("discount factors must lie in (0, 1)");
      if (i && rho_list[i] <= rho_list[i - 1])
        throw std::invalid_argument("discount factors must increase");
    }
  }
};

namespace detail {

// Value of a fixed policy: u = ρ(u(next) − w) along the functional graph.
inline std::vector<long double> evaluate_policy(const PrependGraph& graph, const std::vector<int>& policy,
                                                long double rho, long double log_rho) {
  const int n = graph.node_count();
  std::vector<long double> u(n, 0.0L);
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (int start = 0; start < n; ++start) {
    if (state[start]) continue;
    std::vector<int> path;
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = graph.edge(policy[v]).tgt;
    }
    std::size_t resolved = path.size();
    if (state[v] == 1) {
      // v closes a new cycle inside `path`.
      std::size_t pos = 0;
      while (path[pos] != v) ++pos;
      const std::size_t len = path.size() - pos;
      long double sum = 0.0L, factor = rho;
      for (std::size_t i = pos; i < path.size(); ++i) {
        sum += factor * graph.edge(policy[path[i]]).weight.to_long_double();
        factor *= rho;
      }
      // 1 − ρ^L without cancellation.
      const long double denom = -std::expm1(static_cast<long double>(len) * log_rho);
      u[path[pos]] = -sum / denom;
      for (std::size_t i = path.size() - 1; i > pos; --i) {
        const Edge& ed = graph.edge(policy[path[i]]);
        u[path[i]] = rho * (u[ed.tgt] - ed.weight.to_long_double());
      }
      for (std::size_t i = pos; i < path.size(); ++i) state[path[i]] = 2;
      resolved = pos;
    }
    for (std::size_t i = resolved; i-- > 0;) {
      const Edge& ed = graph.edge(policy[path[i]]);
      u[path[i]] = rho * (u[ed.tgt] - ed.weight.to_long_double());
      state[path[i]] = 2;
    }
  }
  return u;
}

}  // namespace detail

/// Fixed point of L_ρ f(V) = ρ · min_e [f(tgt) − weight(e)].
///
/// Solved by policy iteration with closed-form policy evaluation; the
/// final iterate is checked against one application of L_ρ.
inline FloatFunction discounted_fixed_point(const PrependGraph& graph, const Rational& rho,
                                            long double tolerance = 1e-12L) {
  if (rho <= Rational(0) || rho >= Rational(1)) throw std::invalid_argument("rho must lie in (0, 1)");
  const long double r = rho.to_long_double();
  const long double log_rho = std::log1p(-(Rational(1) - rho).to_long_double());
  const int n = graph.node_count();

  std::vector<int> policy(n);
  for (int v = 0; v < n; ++v) {
    int best = graph.out_edges(v).front();
    for (int e : graph.out_edges(v))
      if (graph.edge(e).weight > graph.edge(best).weight) best = e;
    policy[v] = best;
  }

  std::vector<long double> u;
  for (int iter = 0; iter < 10 * n + 100; ++iter) {
    u = detail::evaluate_policy(graph, policy, r, log_rho);
    long double scale = 1.0L;
    for (long double x : u) scale = std::max(scale, std::fabs(x));
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      const Edge& cur = graph.edge(policy[v]);
      long double cur_val = u[cur.tgt] - cur.weight.to_long_double();
      for (int e : graph.out_edges(v)) {
        const Edge& ed = graph.edge(e);
        long double val = u[ed.tgt] - ed.weight.to_long_double();
        if (val < cur_val - 64 * std::numeric_limits<long double>::epsilon() * scale) {
          cur_val = val;
          policy[v] = e;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  FloatFunction out = graph.make_function(0.0L);
  out.values = u;
  long double residual = 0.0L, scale = 1.0L;
  for (int v = 0; v < n; ++v) {
    long double best = std::numeric_limits<long double>::infinity();
    for (int e : graph.out_edges(v)) {
      const Edge& ed = graph.edge(e);
      best = std::min(best, u[ed.tgt] - ed.weight.to_long_double());
    }
    residual = std::max(residual, std::fabs(r * best - u[v]));
    scale = std::max(scale, std::fabs(u[v]));
  }
  if (residual > tolerance * scale)
    throw NonConvergence("discounted fixed point residual " + std::to_string(static_cast<double>(residual)));
  return out;
}

/// Continued-fraction rounding of every value (denominators ≤ max_den).
inline ExactFunction rational_reconstruction(const FloatFunction& u, std::int64_t max_den = 1'000'000,
                                             long double tol = 1e-8L) {
  ExactFunction out(u.nodes, Rational(0));
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = Rational::from_approximation(u[i], max_den, tol);
  return out;
}

struct DiscountStep {
  Rational rho;
  long double max_u;          // max u_ρ
  long double a_raw;          // (1 − ρ)(−max u_ρ)
  long double a_extrapolated;
  long double change;         // sup-change of the extrapolated limit, NaN on the first step
};

struct CalibratedResult {
  FloatFunction u;            // normalized limit, max u = 0 up to rounding
  long double a = 0.0L;
  ExactFunction u_exact;      // rational reconstruction of u
  std::vector<DiscountStep> trace;
};

/// u = lim (u_ρ − max u_ρ), a = lim (1 − ρ)(−max u_ρ), both extrapolated
/// linearly in ε = 1 − ρ between consecutive schedule entries.
inline CalibratedResult calibrated_via_discount(const PrependGraph& graph,
                                                const DiscountSchedule& schedule = DiscountSchedule::standard()) {
  schedule.validate();
  const int n = graph.node_count();
  CalibratedResult out;
  std::vector<long double> prev_v, prev_lim;
  long double prev_eps = 0.0L, prev_a = 0.0L, prev_a_lim = 0.0L;
  bool have_prev = false, have_lim = false;

  for (const Rational& rho : schedule.rho_list) {
    FloatFunction u = discounted_fixed_point(graph, rho, schedule.inner_tolerance);
    const long double eps = (Rational(1) - rho).to_long_double();
    const long double mx = u.max();
    std::vector<long double> v(n);
    for (int i = 0; i < n; ++i) v[i] = u[i] - mx;
    const long double a = -eps * mx;

    DiscountStep step{rho, mx, a, a, std::numeric_limits<long double>::quiet_NaN()};
    std::vector<long double> lim = v;
    long double a_lim = a;
    if (have_prev) {
      const long double d = prev_eps - eps;
      for (int i = 0; i < n; ++i) lim[i] = (prev_eps * v[i] - eps * prev_v[i]) / d;
      a_lim = (prev_eps * a - eps * prev_a) / d;
      step.a_extrapolated = a_lim;
    }
    if (have_lim) {
      long double change = std::fabs(a_lim - prev_a_lim);
      for (int i = 0; i < n; ++i) change = std::max(change, std::fabs(lim[i] - prev_lim[i]));
      step.change = change;
    }
    out.trace.push_back(step);

    if (have_lim && step.change <= schedule.outer_stop) {
      FloatFunction cand = graph.make_function(0.0L);
      cand.values = lim;
      if (calibration_residual(cand, graph, a_lim) <= schedule.outer_stop) {
        out.u = cand;
        out.a = a_lim;
        out.u_exact = rational_reconstruction(cand);
        return out;
      }
    }
    if (have_prev) {
      prev_lim = lim;
      prev_a_lim = a_lim;
      have_lim = true;
    }
    prev_v = v;
    prev_a = a;
    prev_eps = eps;
    have_prev = true;
  }
  throw NonConvergence("calibrated_via_discount: outer stop not reached by the last discount factor");
}

struct ContactLocus {
  std::vector<int> edges;
  std::vector<char> mask;

  bool contains(int e) const { return mask[e] != 0; }
};

inline ContactLocus contact_locus(const ExactFunction& u, const PrependGraph& graph, const Rational& beta) {
  ContactLocus out;
  out.mask.assign(graph.edge_count(), 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    Rational slack = ed.weight + u[ed.src] - u[ed.tgt] - beta;
    if (slack > Rational(0)) throw NotSubaction("edge " + word_string(ed.key) + " violates the sub-action inequality");
    if (slack.is_zero()) {
      out.edges.push_back(e);
      out.mask[e] = 1;
    }
  }
  return out;
}

/// Nodes with at least one contact edge leaving them.
inline std::vector<int> projected_nodes(const ContactLocus& locus, const PrependGraph& graph) {
  std::vector<char> hit(graph.node_count(), 0);
  for (int e : locus.edges) hit[graph.edge(e).src] = 1;
  std::vector<int> out;
  for (int v = 0; v < graph.node_count(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

struct LivsicResult {
  bool cohomologous = false;
  /// β_A, the constant when cohomologous.
  Rational constant;
  Rational beta_negated;  // β_{−A}
  std::optional<ExactFunction> transfer;
};

/// Decides whether every cycle mean is the same; recovers the transfer
/// function from path sums when it is.
inline LivsicResult livsic_test(const PrependGraph& graph) {
  if (classify_transitivity(graph.system()).kind == TransitivityKind::reducible)
    throw NotTransitive("livsic_test needs a transitive system");
  LivsicResult out;
  out.constant = max_mean_cycle(graph).beta;
  out.beta_negated = max_mean_cycle(graph.negated()).beta;
  out.cohomologous = (out.constant + out.beta_negated).is_zero();
  if (!out.cohomologous) return out;

  ExactFunction u = graph.make_function(Rational(0));
  std::vector<char> seen(graph.node_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int e : graph.out_edges(v)) {
      const Edge& ed = graph.edge(e);
      if (seen[ed.tgt]) continue;
      seen[ed.tgt] = 1;
      u[ed.tgt] = u[v] + ed.weight - out.constant;
      queue.push_back(ed.tgt);
    }
  }
  for (const Edge& ed : graph.edges())
    if (ed.weight + u[ed.src] - u[ed.tgt] != out.constant)
      throw std::logic_error("livsic transfer inconsistent on edge " + word_string(ed.key));
  out.transfer = std::move(u);
  return out;
}

/// u − u' constant on the given nodes.
inline bool rigidity_check(const ExactFunction& u, const ExactFunction& other, const std::vector<int>& support_nodes) {
  if (support_nodes.empty()) return true;
  const Rational d = u[support_nodes.front()] - other[support_nodes.front()];
  for (int v : support_nodes)
    if (u[v] - other[v] != d) return false;
  return true;
}

struct Refinement {
  PrependGraph graph;
  ExactFunction U;
};

/// U_k = W + S_k u / k on the depth-(q+k−1) graph, with
/// W(x) = (1/k) Σ_{m=0}^{k−2} (k−1−m) Ā(x_m | x_{m+1} … x_{m+q}).
inline Refinement refine_subaction_Uk(const ExactFunction& u, const PrependGraph& graph, int k) {
  if (k < 1) throw std::invalid_argument("refinement order must be at least 1");
  const int q = graph.depth();
  PrependGraph fine = graph.refined(q + k - 1);
  ExactFunction U = fine.make_function(Rational(0));
  for (int v = 0; v < fine.node_count(); ++v) {
    const Word& x = fine.node(v);
    Rational w(0), s(0);
    for (int m = 0; m + 1 < k; ++m) {
      Word key(x.begin() + m, x.begin() + m + q + 1);
      w += Rational(k - 1 - m) * graph.reduced().at(key);
    }
    for (int j = 0; j < k; ++j) s += u(Word(x.begin() + j, x.begin() + j + q));
    U[v] = (w + s) / Rational(k);
  }
  return {std::move(fine), std::move(U)};
}

struct NonCalibratedExample {
  PrependGraph graph;
  ExactFunction U;
  int witness = -1;
  /// Calibration defect of U at the witness node (> 0).
  Rational defect;
};

/// U = ½[u∘σ + u] + ½ Ā on the depth-(q+1) graph, together with a node
/// that has no tight outgoing edge.
inline NonCalibratedExample noncalibrated_example(const ExactFunction& u, const PrependGraph& graph,
                                                  const Rational& beta) {
  if (!calibration_residual(u, graph, beta).is_zero())
    throw NotCalibrated("noncalibrated_example needs a calibrated sub-action");
  std::optional<int> strict;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& ed = graph.edge(e);
    if (ed.weight + u[ed.src] - u[ed.tgt] < beta) {
      if (!strict || ed.key < graph.edge(*strict).key) strict = e;
    }
  }
  if (!strict) throw HypothesisFails("every edge is tight: the potential is cohomologous to a constant");

  Refinement ref = refine_subaction_Uk(u, graph, 2);
  NonCalibratedExample out{std::move(ref.graph), std::move(ref.U), -1, Rational(0)};
  out.witness = out.graph.index_of(graph.edge(*strict).key);
  std::optional<Rational> best;
  for (int e : out.graph.out_edges(out.witness)) {
    const Edge& ed = out.graph.edge(e);
    Rational val = out.U[ed.tgt] - ed.weight + beta;
    if (!best || val < *best) best = val;
  }
  out.defect = *best - out.U[out.witness];
  if (out.defect <= Rational(0))
    throw std::logic_error("noncalibrated_example: witness node has a tight edge");
  return out;
}

}  // namespace holonomic

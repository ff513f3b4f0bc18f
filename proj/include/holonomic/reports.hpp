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

// JSON/CSV reports behind the command-line tool. Rationals are always
// emitted as "n/d" strings; floats only appear in discount_trace.

#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holonomic/config.hpp"
#include "holonomic/graph.hpp"
#include "holonomic/mane.hpp"
#include "holonomic/optimization.hpp"
#include "holonomic/oracle.hpp"
#include "holonomic/subaction.hpp"

namespace holonomic {

using Json = nlohmann::ordered_json;

namespace report_detail {

inline std::string node_label(const ExperimentConfig& cfg, const Word& w) {
  Word shifted = w;
  for (auto& s : shifted) s += cfg.symbol_base;
  return word_string(shifted);
}

inline Json function_json(const ExperimentConfig& cfg, const ExactFunction& u) {
  Json out = Json::object();
  for (std::size_t i = 0; i < u.size(); ++i) out[node_label(cfg, u.nodes[i])] = u[i].str();
  return out;
}

inline Json edge_list(const ExperimentConfig& cfg, const PrependGraph& g, const std::vector<int>& edges) {
  Json out = Json::array();
  for (int e : edges) out.push_back(node_label(cfg, g.edge(e).key));
  return out;
}

inline Json contact_json(const ExperimentConfig& cfg, const PrependGraph& g, const ExactFunction& u,
                         const Rational& beta) {
  return edge_list(cfg, g, contact_locus(u, g, beta).edges);
}

inline void require_transitive(const SubshiftSystem& system, const char* what) {
  if (classify_transitivity(system).kind == TransitivityKind::reducible)
    throw NotTransitive(std::string(what) + " needs a transitive system");
}

}  // namespace report_detail

inline Json cmd_beta(const ExperimentConfig& cfg) {
  using namespace report_detail;
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const BetaResult karp = max_mean_cycle(g);
  const Rational param = parametric_beta(g);
  const Rational lp = beta_lp(g).first;
  const ExactFunction cert = maximal_subaction(g, karp.beta);

  Json out;
  out["beta"] = karp.beta.str();
  out["witness_cycle"] = edge_list(cfg, g, karp.witness_cycle);
  out["methods"] = {{"karp", karp.beta.str()}, {"parametric", param.str()}, {"lp", lp.str()}};
  out["methods_agree"] = karp.beta == param && param == lp;
  out["certificate_subaction"] = function_json(cfg, cert);
  out["certificate_max_slack"] = subaction_residual(cert, g, karp.beta).max_slack.str();
  return out;
}

enum class SubactionKind { maximal, calibrated, u0 };

inline Json cmd_subaction(const ExperimentConfig& cfg, SubactionKind kind) {
  using namespace report_detail;
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const Rational beta = max_mean_cycle(g).beta;
  Json out;
  out["beta"] = beta.str();
  ExactFunction u;
  switch (kind) {
    case SubactionKind::maximal:
      out["kind"] = "maximal";
      u = maximal_subaction(g, beta);
      break;
    case SubactionKind::u0:
      out["kind"] = "u0";
      require_transitive(cfg.system, "u0");
      u = maximal_calibrated(g, make_omega(g, beta));
      break;
    case SubactionKind::calibrated: {
      out["kind"] = "calibrated";
      require_transitive(cfg.system, "calibrated");
      CalibratedResult res = calibrated_via_discount(g, cfg.solver.schedule());
      u = res.u_exact.shifted_by(-res.u_exact.max());
      Json trace = Json::array();
      for (const auto& s : res.trace) {
        Json step;
        step["rho"] = s.rho.str();
        step["max_u_float"] = static_cast<double>(s.max_u);
        step["a_float"] = static_cast<double>(s.a_raw);
        step["a_extrapolated_float"] = static_cast<double>(s.a_extrapolated);
        if (!std::isnan(s.change)) step["change_float"] = static_cast<double>(s.change);
        trace.push_back(step);
      }
      out["discount_trace"] = trace;
      break;
    }
  }
  out["values"] = function_json(cfg, u);
  out["subaction_residual"] = subaction_residual(u, g, beta).max_slack.str();
  out["calibration_residual"] = calibration_residual(u, g, beta).str();
  out["contact_locus"] = contact_json(cfg, g, u, beta);
  return out;
}

inline Json cmd_mane(const ExperimentConfig& cfg) {
  using namespace report_detail;
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const OmegaSet omega = make_omega(g);
  Json out;
  out["beta"] = omega.beta().str();
  Json nodes = Json::array();
  for (const Word& w : g.nodes()) nodes.push_back(node_label(cfg, w));
  out["nodes"] = nodes;
  Json phi = Json::array();
  for (int u = 0; u < g.node_count(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < g.node_count(); ++v) {
      const auto& val = omega.phi(u, v);
      row.push_back(val ? Json(val->str()) : Json(nullptr));
    }
    phi.push_back(row);
  }
  out["phi"] = phi;
  Json classes = Json::array();
  for (const auto& cls : omega.critical.classes) {
    Json c = Json::array();
    for (int v : cls) c.push_back(node_label(cfg, g.node(v)));
    classes.push_back(c);
  }
  out["critical_classes"] = classes;
  out["critical_edges"] = edge_list(cfg, g, omega.critical.critical_edge_ids());
  Json summary;
  int critical_nodes = 0;
  for (char c : omega.critical.critical_node) critical_nodes += c;
  summary["critical_nodes"] = critical_nodes;
  summary["critical_edges"] = static_cast<int>(omega.critical.critical_edge_ids().size());
  summary["classes"] = omega.critical.class_count();
  out["omega"] = summary;
  return out;
}

/// Φ as CSV, header row and column of node labels, empty cells for +∞.
inline std::string mane_csv(const ExperimentConfig& cfg) {
  using namespace report_detail;
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const OmegaSet omega = make_omega(g);
  std::ostringstream out;
  out << "node";
  for (const Word& w : g.nodes()) out << ',' << node_label(cfg, w);
  out << '\n';
  for (int u = 0; u < g.node_count(); ++u) {
    out << node_label(cfg, g.node(u));
    for (int v = 0; v < g.node_count(); ++v) {
      out << ',';
      if (const auto& val = omega.phi(u, v)) out << val->str();
    }
    out << '\n';
  }
  return out.str();
}

inline Json cmd_classify(const ExperimentConfig& cfg, const std::vector<Rational>& f) {
  using namespace report_detail;
  require_transitive(cfg.system, "classify");
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const OmegaSet omega = make_omega(g);
  const BoundaryData data{f};
  const ExactFunction u = reconstruct(data, g, omega);
  const BoundaryData back = represent(u, g, omega);
  Json out;
  out["beta"] = omega.beta().str();
  Json classes = Json::array();
  for (const auto& cls : omega.critical.classes) {
    Json c = Json::array();
    for (int v : cls) c.push_back(node_label(cfg, g.node(v)));
    classes.push_back(c);
  }
  out["critical_classes"] = classes;
  Json fj = Json::array();
  for (const auto& v : f) fj.push_back(v.str());
  out["boundary"] = fj;
  out["compatible"] = compatible(data, omega);
  out["values"] = function_json(cfg, u);
  Json bj = Json::array();
  for (const auto& v : back.values) bj.push_back(v.str());
  out["represented_boundary"] = bj;
  out["calibration_residual"] = calibration_residual(u, g, omega.beta()).str();
  out["round_trip"] = back == data;
  return out;
}

inline Json cmd_alpha(const ExperimentConfig& cfg) {
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  const ConstraintSpec& spec = cfg.constraints;
  if (spec.components.empty()) throw ConfigError(0, "alpha needs at least one [constraint] section");
  Json out;
  out["beta"] = max_mean_cycle(g).beta.str();
  if (spec.multiplier) {
    Json c = Json::array();
    for (const auto& v : *spec.multiplier) c.push_back(v.str());
    out["c"] = c;
    out["alpha"] = alpha(g, spec).str();
    Json avg = Json::array();
    for (const auto& v : optimal_trajectory_average(g, spec, *spec.multiplier, 1'000'000)) avg.push_back(v.str());
    out["trajectory_average"] = avg;
    out["trajectory_length"] = 1'000'000;
  }
  if (spec.target) {
    Json h = Json::array();
    for (const auto& v : *spec.target) h.push_back(v.str());
    out["h"] = h;
    try {
      out["constrained_beta"] = constrained_beta(g, spec).str();
    } catch (const InfeasibleTarget&) {
      out["constrained_beta"] = nullptr;
      out["infeasible_target"] = true;
    }
  }
  return out;
}

namespace report_detail {

struct CheckList {
  Json items = Json::array();
  bool all = true;

  void add(const std::string& name, bool pass, const std::string& detail = {}) {
    Json item;
    item["name"] = name;
    item["pass"] = pass;
    if (!detail.empty()) item["detail"] = detail;
    items.push_back(item);
    all = all && pass;
  }

  void skip(const std::string& name, const std::string& why) {
    Json item;
    item["name"] = name;
    item["skipped"] = why;
    items.push_back(item);
  }
};

// Periodic points with period ≤ max_len, as canonical Points.
inline std::vector<Point> periodic_points(const SubshiftSystem& system, int max_len) {
  std::vector<Point> out;
  for (int len = 1; len <= max_len; ++len)
    for (const Word& w : system.allowed_words(len))
      if (system.allowed(w.back(), w.front())) {
        Point p = Point::forward({}, w);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      }
  return out;
}

}  // namespace report_detail

/// Runs the invariant suite on one configuration, oracles included.
inline Json cmd_check(const ExperimentConfig& cfg) {
  using namespace report_detail;
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  CheckList checks;
  const BetaResult karp = max_mean_cycle(g);
  const Rational beta = karp.beta;
  const Rational param = parametric_beta(g);
  const auto [lp, lp_measure] = beta_lp(g);
  checks.add("beta_methods_agree", beta == param && param == lp,
             "karp " + beta.str() + ", parametric " + param.str() + ", lp " + lp.str());
  checks.add("witness_mean_is_beta", cycle_mean(g, karp.witness_cycle) == beta);
  checks.add("lp_vertex_is_uniform_cycle", is_circulation(g, lp_measure) && is_uniform_cycle(g, lp_measure));

  const long long table_size = static_cast<long long>(cfg.potential.table().size());
  if (g.node_count() <= 16 && table_size <= 64) {
    const Rational oracle = oracle_beta(cfg.system, cfg.potential, g.node_count());
    checks.add("oracle_beta", oracle == beta, "oracle " + oracle.str());
  } else {
    checks.skip("oracle_beta", "instance too large for enumeration");
  }

  const ExactFunction uA = maximal_subaction(g, beta);
  checks.add("maximal_subaction_is_subaction", subaction_residual(uA, g, beta).max_slack <= Rational(0));

  const OmegaSet omega = make_omega(g, beta);
  bool triangle = true, diagonal = true;
  const int n = g.node_count();
  for (int a = 0; a < n; ++a) {
    const auto& d = omega.phi(a, a);
    if (omega.critical.critical_node[a] != static_cast<char>(d && d->is_zero())) diagonal = false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto &ab = omega.phi(a, b), &bc = omega.phi(b, c), &ac = omega.phi(a, c);
        if (ab && bc && (!ac || *ac > *ab + *bc)) triangle = false;
      }
  }
  checks.add("phi_triangle_inequality", triangle);
  checks.add("phi_diagonal_zero_iff_critical", diagonal);

  std::vector<Point> points = periodic_points(cfg.system, 3);
  if (n <= 16 && table_size <= 64) {
    bool agree = true;
    std::string first_bad;
    for (const Point& x : points) {
      const bool graph_says = omega_membership(g, omega, x);
      const OmegaHorizon hz = omega_horizon(cfg.system, cfg.potential, beta, x, n);
      const bool oracle_says = oracle_omega(cfg.system, cfg.potential, beta, x, hz.eps, hz.max_path_len);
      if (graph_says != oracle_says) {
        agree = false;
        if (first_bad.empty()) first_bad = x.str();
      }
    }
    checks.add("omega_membership_vs_oracle", agree, first_bad.empty() ? "" : "disagreement at " + first_bad);
  } else {
    checks.skip("omega_membership_vs_oracle", "instance too large for enumeration");
  }

  if (classify_transitivity(cfg.system).kind == TransitivityKind::reducible) {
    checks.skip("calibrated_checks", "reducible system: calibrated sub-actions need transitivity");
  } else {
    try {
      CalibratedResult res = calibrated_via_discount(g, cfg.solver.schedule());
      const bool calibrated = calibration_residual(res.u_exact, g, beta).is_zero();
      checks.add("discount_limit_calibrated", calibrated);
      if (calibrated) checks.add("representation_round_trip", reconstruct(represent(res.u_exact, g, omega), g, omega) == res.u_exact);
    } catch (const NonConvergence& e) {
      checks.add("discount_limit_calibrated", false, e.what());
    }
    const ExactFunction u0 = maximal_calibrated(g, omega);
    checks.add("u0_calibrated", calibration_residual(u0, g, beta).is_zero());
    bool family = true;
    for (const Point& x : points) {
      if (!omega_membership(g, omega, x)) continue;
      const ExactFunction s = mane_family_subaction(g, omega, x);
      family = family && calibration_residual(s, g, beta).is_zero();
    }
    checks.add("mane_family_calibrated", family);
    const LivsicResult liv = livsic_test(g);
    checks.add("livsic_consistent", liv.cohomologous == (beta == -liv.beta_negated));
  }

  Json out;
  out["beta"] = beta.str();
  out["checks"] = checks.items;
  out["all_pass"] = checks.all;
  return out;
}

/// Wall-clock microseconds per β algorithm.
inline Json cmd_bench(const ExperimentConfig& cfg, int repeats = 5) {
  const PrependGraph g = build_prepend_graph(cfg.system, cfg.potential);
  auto time = [&](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / repeats;
  };
  Json out;
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  out["repeats"] = repeats;
  out["karp_us"] = time([&] { (void)max_mean_cycle(g); });
  out["parametric_us"] = time([&] { (void)parametric_beta(g); });
  out["lp_us"] = time([&] { (void)beta_lp(g); });
  out["floyd_us"] = time([&] { (void)min_cost_all_pairs(g, max_mean_cycle(g).beta); });
  return out;
}

}  // namespace holonomic

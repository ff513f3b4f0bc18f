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

// Exhaustive reference computations for tiny instances. Works directly on
// the potential table and symbol sequences; no graph, no reduction.

#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/potential.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

namespace detail {

// Words t of length `len` with t·anchor allowed.
inline std::vector<Word> tails_before(const SubshiftSystem& system, Symbol anchor, int len) {
  std::vector<Word> out;
  for (Word& w : system.allowed_words(len + 1))
    if (w.back() == anchor) {
      w.pop_back();
      out.push_back(std::move(w));
    }
  return out;
}

}  // namespace detail

/// Max over cyclically allowed orbits of length ≤ max_cycle_len and every
/// choice of per-step tail of the average of A.
inline Rational oracle_beta(const SubshiftSystem& system, const LocallyConstantPotential& A, int max_cycle_len) {
  const int r = system.alphabet_size();
  const int p = A.past_depth(), q = A.future_depth();
  std::optional<Rational> best;
  Word orbit;
  std::vector<std::vector<Word>> tails(r);
  for (Symbol a = 0; a < r; ++a) tails[a] = detail::tails_before(system, a, p - 1);

  // The average is a sum of one term per step and each step chooses its own
  // tail, so the best tail product is the product of per-step best tails.
  auto score = [&](const Word& x) {
    const std::size_t M = x.size();
    Rational sum(0);
    for (std::size_t j = 0; j < M; ++j) {
      const Symbol anchor = x[(j + M - 1) % M];
      std::optional<Rational> step;
      for (Word w : tails[anchor]) {
        w.push_back(anchor);
        for (int i = 0; i < q; ++i) w.push_back(x[(j + i) % M]);
        const Rational& v = A.at(w);
        if (!step || v > *step) step = v;
      }
      sum += *step;
    }
    const Rational avg = sum / Rational(static_cast<std::int64_t>(M));
    if (!best || avg > *best) best = avg;
  };

  std::function<void(int)> grow = [&](int len) {
    if (!orbit.empty() && system.allowed(orbit.back(), orbit.front())) score(orbit);
    if (len == max_cycle_len) return;
    for (Symbol s = 0; s < r; ++s) {
      if (!orbit.empty() && !system.allowed(orbit.back(), s)) continue;
      orbit.push_back(s);
      grow(len + 1);
      orbit.pop_back();
    }
  };
  grow(0);
  if (!best) throw std::invalid_argument("oracle_beta found no cycle; raise max_cycle_len");
  return *best;
}

struct OracleManeResult {
  Rational value;
  int horizon = 0;
};

namespace detail {

// Depth-first enumeration of prepend paths from `start`. The visitor gets
// the endpoint (as prepended symbols over `start`) and the accumulated
// −Σ(A − β); returning true stops the search.
class PathEnumerator {
 public:
  PathEnumerator(const SubshiftSystem& system, const LocallyConstantPotential& A, const Rational& beta,
                 const Point& start)
      : system_(system), A_(A), beta_(beta), start_(start) {}

  Symbol at(std::size_t i) const {
    const std::size_t k = stack_.size();
    return i < k ? stack_[k - 1 - i] : start_.at(i - k);
  }

  bool agrees_with(const Point& x, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i)
      if (at(i) != x.at(i)) return false;
    return true;
  }

  template <typename Visitor>
  bool run(int max_len, Visitor&& visit) {
    return step(max_len, Rational(0), visit);
  }

 private:
  template <typename Visitor>
  bool step(int remaining, const Rational& cost, Visitor& visit) {
    if (remaining == 0) return false;
    const int p = A_.past_depth(), q = A_.future_depth();
    for (Symbol s = 0; s < system_.alphabet_size(); ++s) {
      if (!system_.allowed(s, at(0))) continue;
      for (const Word& tail : tails_before(system_, s, p - 1)) {
        Word w = tail;
        w.push_back(s);
        for (int i = 0; i < q; ++i) w.push_back(at(static_cast<std::size_t>(i)));
        const Rational next = cost - (A_.at(w) - beta_);
        stack_.push_back(s);
        bool stop = visit(*this, next) || step(remaining - 1, next, visit);
        stack_.pop_back();
        if (stop) return true;
      }
    }
    return false;
  }

  const SubshiftSystem& system_;
  const LocallyConstantPotential& A_;
  Rational beta_;
  Point start_;
  std::vector<Symbol> stack_;
};

}  // namespace detail

/// min of −Σ(A − β) over prepend paths of length ≤ max_path_len that start
/// at x̄ and end within λ^N of x.
inline OracleManeResult oracle_mane(const SubshiftSystem& system, const LocallyConstantPotential& A,
                                    const Rational& beta, const Point& x, const Point& target, int N,
                                    int max_path_len) {
  validate_point(system, x);
  validate_point(system, target);
  // d(z, x) < λ^N ⟺ z agrees with x on indices 0 … N.
  const auto agree = static_cast<std::size_t>(N) + 1;
  std::optional<Rational> best;
  detail::PathEnumerator paths(system, A, beta, target);
  paths.run(max_path_len, [&](const detail::PathEnumerator& pe, const Rational& cost) {
    if (pe.agrees_with(x, agree) && (!best || cost < *best)) best = cost;
    return false;
  });
  if (!best) throw HorizonTooSmall("no path within " + std::to_string(max_path_len) + " steps");
  return {*best, max_path_len};
}

/// Searches for a path from x back to within ε of x with |Σ(A − β)| < ε.
inline bool oracle_omega(const SubshiftSystem& system, const LocallyConstantPotential& A, const Rational& beta,
                         const Point& x, const Rational& eps, int max_path_len) {
  validate_point(system, x);
  // Number of leading symbols that must agree for d < ε.
  std::size_t agree = 0;
  Rational scale(1);
  while (scale >= eps) {
    scale *= system.metric_lambda();
    ++agree;
  }
  detail::PathEnumerator paths(system, A, beta, x);
  return paths.run(max_path_len, [&](const detail::PathEnumerator& pe, const Rational& cost) {
    return abs(cost) < eps && pe.agrees_with(x, agree);
  });
}

struct OmegaHorizon {
  Rational eps;
  int max_path_len = 0;
};

/// ε below both λ^m (m covering the preperiod, one period and a window) and
/// half the smallest positive cycle deficit; path length m + L + node_count.
inline OmegaHorizon omega_horizon(const SubshiftSystem& system, const LocallyConstantPotential& A,
                                  const Rational& beta, const Point& x, int node_count) {
  const int pre = static_cast<int>(x.preperiod().size());
  const int L = static_cast<int>(x.period().size());
  const int m = pre + L + A.future_depth() + 1;
  std::int64_t den = beta.den();
  for (const auto& [w, v] : A.table()) den = std::lcm(den, v.den());
  Rational eps = pow(system.metric_lambda(), m);
  eps = std::min(eps, Rational(1, 2 * den));
  return {eps, m + L + node_count};
}

}  // namespace holonomic

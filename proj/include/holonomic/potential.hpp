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

// Locally constant potentials on the natural extension.

#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "holonomic/errors.hpp"
#include "holonomic/node_function.hpp"
#include "holonomic/rational.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

/// A potential A(y, x) depending on (y_{p-1}, …, y_0 | x_0, …, x_{q-1}).
///
/// Windows are stored as the allowed word y_{p-1} … y_0 x_0 … x_{q-1} of
/// length p + q; the table is dense over all allowed windows.
class LocallyConstantPotential {
 public:
  LocallyConstantPotential(const SubshiftSystem& system, int past_depth, int future_depth,
                           const std::map<Word, Rational>& entries = {},
                           Rational fill = Rational(0))
      : past_depth_(past_depth), future_depth_(future_depth) {
    if (past_depth < 1 || future_depth < 1)
      throw InvalidPotential("past and future depth must both be at least 1");
    for (const Word& w : system.allowed_words(past_depth + future_depth)) table_.emplace(w, fill);
    for (const auto& [w, v] : entries) {
      auto it = table_.find(w);
      if (it == table_.end())
        throw InvalidPotential("window " + word_string(w) + " is not an allowed word of length " +
                               std::to_string(past_depth + future_depth));
      it->second = v;
    }
  }

  /// Depth-(1, q) potential from per-edge values keyed by (y_0 | x_0 … x_{q-1}).
  static LocallyConstantPotential from_edge_weights(const SubshiftSystem& system, int future_depth,
                                                    const std::map<Word, Rational>& weights) {
    return LocallyConstantPotential(system, 1, future_depth, weights);
  }

  int past_depth() const { return past_depth_; }
  int future_depth() const { return future_depth_; }
  int window_length() const { return past_depth_ + future_depth_; }
  const std::map<Word, Rational>& table() const { return table_; }

  const Rational& at(const Word& window) const {
    auto it = table_.find(window);
    if (it == table_.end()) throw InvalidPotential("window " + word_string(window) + " not allowed");
    return it->second;
  }

  Rational oscillation() const {
    Rational lo = table_.begin()->second, hi = lo;
    for (const auto& [w, v] : table_) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi - lo;
  }

  friend bool operator==(const LocallyConstantPotential&, const LocallyConstantPotential&) = default;

 private:
  int past_depth_;
  int future_depth_;
  std::map<Word, Rational> table_;
};

inline Word potential_window(const LocallyConstantPotential& A, const PairedPoint& p) {
  Word w;
  w.reserve(A.window_length());
  for (int j = A.past_depth() - 1; j >= 0; --j) w.push_back(p.past.at(j));
  for (int j = 0; j < A.future_depth(); ++j) w.push_back(p.future.at(j));
  return w;
}

inline Rational evaluate(const LocallyConstantPotential& A, const PairedPoint& p) {
  return A.at(potential_window(A, p));
}

/// Past tails maximized out: Ā(s | w) over (q+1)-words s·w.
struct ReducedPotential {
  int future_depth = 1;
  std::map<Word, Rational> edge_table;
  /// Tails y_{p-1} … y_1 attaining the max; a single empty tail when p = 1.
  std::map<Word, std::vector<Word>> argmax_tails;

  const Rational& at(const Word& key) const {
    auto it = edge_table.find(key);
    if (it == edge_table.end()) throw InvalidPotential("edge key " + word_string(key) + " not allowed");
    return it->second;
  }

  bool tail_is_optimal(const Word& key, const Word& tail) const {
    const auto& tails = argmax_tails.at(key);
    return std::find(tails.begin(), tails.end(), tail) != tails.end();
  }

  friend bool operator==(const ReducedPotential&, const ReducedPotential&) = default;
};

inline ReducedPotential reduce_past(const LocallyConstantPotential& A) {
  ReducedPotential out;
  out.future_depth = A.future_depth();
  const auto tail_len = static_cast<std::size_t>(A.past_depth() - 1);
  for (const auto& [window, value] : A.table()) {
    Word key(window.begin() + static_cast<long>(tail_len), window.end());
    Word tail(window.begin(), window.begin() + static_cast<long>(tail_len));
    auto it = out.edge_table.find(key);
    if (it == out.edge_table.end() || value > it->second) {
      out.edge_table[key] = value;
      out.argmax_tails[key] = {tail};
    } else if (value == it->second) {
      out.argmax_tails[key].push_back(tail);
    }
  }
  return out;
}

/// Same potential read at a deeper future resolution (q' ≥ q).
inline ReducedPotential pad_future(const SubshiftSystem& system, const ReducedPotential& reduced,
                                   int future_depth) {
  if (future_depth < reduced.future_depth)
    throw std::invalid_argument("pad_future cannot reduce the depth");
  ReducedPotential out;
  out.future_depth = future_depth;
  for (const Word& key : system.allowed_words(future_depth + 1)) {
    Word base(key.begin(), key.begin() + reduced.future_depth + 1);
    out.edge_table[key] = reduced.at(base);
    out.argmax_tails[key] = reduced.argmax_tails.at(base);
  }
  return out;
}

/// A' = A + f∘π₁ − f∘π₁∘σ̂⁻¹ + a, with f on q-words.
///
/// τ_y(x) only needs y_0 and x_0 … x_{q-2}, so A' keeps the depths of A.
inline LocallyConstantPotential coboundary_modify(const SubshiftSystem& system,
                                                  const LocallyConstantPotential& A,
                                                  const ExactFunction& f, const Rational& a) {
  const int p = A.past_depth(), q = A.future_depth();
  if (f.depth() != static_cast<std::size_t>(q))
    throw std::invalid_argument("coboundary function must live on words of the future depth");
  std::map<Word, Rational> entries;
  for (const auto& [window, value] : A.table()) {
    Word x(window.begin() + p, window.end());
    Word tau(window.begin() + p - 1, window.end() - 1);
    entries[window] = value + f(x) - f(tau) + a;
  }
  return LocallyConstantPotential(system, p, q, entries);
}

/// Hölder constant osc(A)/λ^{θ(p+q−1)} for the locally constant A, rounded
/// up to a rational when the power is irrational.
inline Rational holder_bound(const LocallyConstantPotential& A, const Rational& theta,
                             const SubshiftSystem& system) {
  if (theta <= Rational(0) || theta > Rational(1))
    throw std::invalid_argument("theta must lie in (0, 1]");
  const Rational osc = A.oscillation();
  if (osc.is_zero()) return osc;
  const Rational exponent = theta * Rational(A.window_length() - 1);
  if (exponent.den() == 1)
    return osc / pow(system.metric_lambda(), static_cast<int>(exponent.num()));
  long double value = osc.to_long_double() /
                      std::pow(system.metric_lambda().to_long_double(), exponent.to_long_double());
  constexpr std::int64_t scale = 1'000'000;
  auto n = static_cast<std::int64_t>(std::ceil(value * scale)) + 1;
  return Rational(n, scale);
}

/// S_k f(x) = Σ_{j<k} f(σ^j x).
inline Rational birkhoff_sum(const ExactFunction& f, const Point& x, int k) {
  if (k < 0) throw std::invalid_argument("birkhoff_sum needs k >= 0");
  Rational sum(0);
  const auto q = f.depth();
  for (int j = 0; j < k; ++j) sum += f(window(x, static_cast<std::size_t>(j), q));
  return sum;
}

/// Constraint functions φ_1, …, φ_n with optional target h or multiplier c.
struct ConstraintSpec {
  std::vector<LocallyConstantPotential> components;
  std::optional<std::vector<Rational>> target;
  std::optional<std::vector<Rational>> multiplier;
};

}  // namespace holonomic

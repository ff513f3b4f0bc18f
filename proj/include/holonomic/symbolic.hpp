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

// Subshifts of finite type, their dual shift and natural extension, at the
// level of eventually periodic points.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "holonomic/detail/digraph.hpp"
#include "holonomic/errors.hpp"
#include "holonomic/rational.hpp"

namespace holonomic {

using Symbol = int;
using Word = std::vector<Symbol>;

inline std::string word_string(const Word& w) {
  // Multi-digit symbols need a separator.
  const bool wide = !w.empty() && *std::max_element(w.begin(), w.end()) > 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && wide) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

class SubshiftSystem {
 public:
  SubshiftSystem(std::vector<std::vector<int>> transition, Rational metric_lambda = Rational(1, 2))
      : transition_(std::move(transition)), lambda_(metric_lambda) {
    const auto r = transition_.size();
    if (r == 0) throw InvalidSystem("alphabet must be nonempty");
    for (std::size_t i = 0; i < r; ++i) {
      if (transition_[i].size() != r) throw InvalidSystem("transition matrix must be square");
      for (int v : transition_[i])
        if (v != 0 && v != 1) throw InvalidSystem("transition entries must be 0 or 1");
    }
    for (std::size_t i = 0; i < r; ++i) {
      bool row = false, col = false;
      for (std::size_t j = 0; j < r; ++j) {
        row = row || transition_[i][j];
        col = col || transition_[j][i];
      }
      if (!row || !col)
        throw InvalidSystem("symbol " + std::to_string(i) + " has an empty row or column");
    }
    if (lambda_ <= Rational(0) || lambda_ >= Rational(1))
      throw InvalidSystem("metric lambda must lie strictly between 0 and 1");
  }

  static SubshiftSystem full_shift(int r, Rational metric_lambda = Rational(1, 2)) {
    return SubshiftSystem(std::vector<std::vector<int>>(r, std::vector<int>(r, 1)), metric_lambda);
  }

  int alphabet_size() const { return static_cast<int>(transition_.size()); }
  const std::vector<std::vector<int>>& transition() const { return transition_; }
  const Rational& metric_lambda() const { return lambda_; }

  bool allowed(Symbol a, Symbol b) const {
    return a >= 0 && b >= 0 && a < alphabet_size() && b < alphabet_size() && transition_[a][b] == 1;
  }

  bool allowed_word(const Word& w) const {
    for (Symbol s : w)
      if (s < 0 || s >= alphabet_size()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (!allowed(w[i], w[i + 1])) return false;
    return true;
  }

  /// All allowed words of the given length, in lexicographic order.
  std::vector<Word> allowed_words(int length) const {
    std::vector<Word> out;
    if (length <= 0) {
      out.emplace_back();
      return out;
    }
    for (Symbol s = 0; s < alphabet_size(); ++s) out.push_back({s});
    for (int len = 1; len < length; ++len) {
      std::vector<Word> next;
      for (const Word& w : out)
        for (Symbol s = 0; s < alphabet_size(); ++s)
          if (allowed(w.back(), s)) {
            Word v = w;
            v.push_back(s);
            next.push_back(std::move(v));
          }
      out = std::move(next);
    }
    return out;
  }

  detail::Adjacency symbol_graph() const {
    detail::Adjacency adj(alphabet_size());
    for (int a = 0; a < alphabet_size(); ++a)
      for (int b = 0; b < alphabet_size(); ++b)
        if (allowed(a, b)) adj[a].push_back(b);
    return adj;
  }

  friend bool operator==(const SubshiftSystem&, const SubshiftSystem&) = default;

 private:
  std::vector<std::vector<int>> transition_;
  Rational lambda_;
};

enum class Orientation { forward, backward };

/// Eventually periodic one-sided sequence `preperiod · period · period · …`.
///
/// For a forward point the symbol at index j is x_j; for a backward point it
/// is y_j, read right to left in the usual (…, y_1, y_0) notation. The
/// representation is kept canonical: primitive period, shortest preperiod.
class Point {
 public:
  Point(Word preperiod, Word period, Orientation orientation = Orientation::forward)
      : prefix_(std::move(preperiod)), period_(std::move(period)), orientation_(orientation) {
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    canonicalize();
  }

  static Point forward(Word preperiod, Word period) {
    return Point(std::move(preperiod), std::move(period), Orientation::forward);
  }
  static Point backward(Word preperiod, Word period) {
    return Point(std::move(preperiod), std::move(period), Orientation::backward);
  }

  const Word& preperiod() const { return prefix_; }
  const Word& period() const { return period_; }
  Orientation orientation() const { return orientation_; }

  Symbol at(std::size_t j) const {
    if (j < prefix_.size()) return prefix_[j];
    return period_[(j - prefix_.size()) % period_.size()];
  }

  /// Drops the symbol at index 0 (σ for forward points, σ* for backward ones).
  Point shifted() const {
    if (!prefix_.empty()) return Point(Word(prefix_.begin() + 1, prefix_.end()), period_, orientation_);
    Word rotated(period_.begin() + 1, period_.end());
    rotated.push_back(period_.front());
    return Point({}, std::move(rotated), orientation_);
  }

  /// Index from which the two points are guaranteed to agree forever if they
  /// agree up to it.
  std::size_t comparison_horizon(const Point& other) const {
    return std::max(prefix_.size(), other.prefix_.size()) +
           std::lcm(period_.size(), other.period_.size());
  }

  std::string str() const {
    std::string out = word_string(prefix_);
    if (!prefix_.empty()) out += '.';
    return out + "(" + word_string(period_) + ")";
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  void canonicalize() {
    const std::size_t n = period_.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d) continue;
      bool ok = true;
      for (std::size_t i = d; i < n && ok; ++i) ok = period_[i] == period_[i - d];
      if (ok) {
        period_.resize(d);
        break;
      }
    }
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      prefix_.pop_back();
    }
  }

  Word prefix_;
  Word period_;
  Orientation orientation_;
};

/// Throws ForbiddenTransition unless the infinite word is allowed.
inline void validate_point(const SubshiftSystem& system, const Point& p) {
  const std::size_t horizon = p.preperiod().size() + p.period().size() + 1;
  for (std::size_t j = 0; j < horizon; ++j) {
    Symbol a = p.at(j), b = p.at(j + 1);
    if (a < 0 || a >= system.alphabet_size())
      throw ForbiddenTransition("symbol " + std::to_string(a) + " outside the alphabet");
    bool ok = p.orientation() == Orientation::forward ? system.allowed(a, b) : system.allowed(b, a);
    if (!ok)
      throw ForbiddenTransition("point " + p.str() + " uses a forbidden transition at index " +
                                std::to_string(j));
  }
}

/// A point (y, x) of the natural extension, with M(y_0, x_0) = 1.
struct PairedPoint {
  Point past;
  Point future;

  PairedPoint(const SubshiftSystem& system, Point past_point, Point future_point)
      : past(std::move(past_point)), future(std::move(future_point)) {
    if (past.orientation() != Orientation::backward || future.orientation() != Orientation::forward)
      throw std::invalid_argument("paired point needs a backward past and a forward future");
    validate_point(system, past);
    validate_point(system, future);
    if (!system.allowed(past.at(0), future.at(0)))
      throw ForbiddenTransition("(y0, x0) is not an allowed word");
  }

  friend bool operator==(const PairedPoint&, const PairedPoint&) = default;
};

enum class TransitivityKind { reducible, transitive, mixing };

struct Transitivity {
  TransitivityKind kind;
  /// gcd of cycle lengths; 0 for reducible systems.
  int period;
};

inline const char* to_string(TransitivityKind k) {
  switch (k) {
    case TransitivityKind::reducible: return "reducible";
    case TransitivityKind::transitive: return "transitive";
    case TransitivityKind::mixing: return "mixing";
  }
  return "?";
}

inline Transitivity classify_transitivity(const SubshiftSystem& system) {
  auto adj = system.symbol_graph();
  if (!detail::strongly_connected(adj)) return {TransitivityKind::reducible, 0};
  const int r = system.alphabet_size();
  std::vector<int> level(r, -1);
  std::vector<int> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : adj[v])
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
  }
  int g = 0;
  for (int v = 0; v < r; ++v)
    for (int w : adj[v]) g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
  return {g == 1 ? TransitivityKind::mixing : TransitivityKind::transitive, g};
}

/// τ: the forward point (s, x_0, x_1, …).
inline Point prepend(const SubshiftSystem& system, const Point& x, Symbol s) {
  if (!system.allowed(s, x.at(0)))
    throw ForbiddenTransition("cannot prepend " + std::to_string(s) + " to " + x.str());
  Word prefix{s};
  prefix.insert(prefix.end(), x.preperiod().begin(), x.preperiod().end());
  return Point(std::move(prefix), x.period(), x.orientation());
}

/// σ̂⁻¹(y, x) = (σ*(y), τ_y(x)).
inline PairedPoint natural_extension_inverse(const SubshiftSystem& system, const PairedPoint& p) {
  return PairedPoint(system, p.past.shifted(), prepend(system, p.future, p.past.at(0)));
}

/// d(x, x̄) = λ^k, k the first index where the points disagree.
inline Rational distance(const SubshiftSystem& system, const Point& x, const Point& other) {
  if (x.orientation() != other.orientation())
    throw std::invalid_argument("distance needs points of the same orientation");
  const std::size_t horizon = x.comparison_horizon(other);
  for (std::size_t k = 0; k < horizon; ++k)
    if (x.at(k) != other.at(k)) return pow(system.metric_lambda(), static_cast<int>(k));
  return Rational(0);
}

/// Admissible y_0 for a forward point x.
inline std::vector<Symbol> compatible_pasts(const SubshiftSystem& system, const Point& x) {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < system.alphabet_size(); ++s)
    if (system.allowed(s, x.at(0))) out.push_back(s);
  return out;
}

inline Word window(const Point& p, std::size_t start, std::size_t length) {
  if (length < 1) throw std::invalid_argument("window length must be positive");
  Word out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = p.at(start + i);
  return out;
}

}  // namespace holonomic

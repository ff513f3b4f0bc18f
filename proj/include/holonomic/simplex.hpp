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

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "holonomic/rational.hpp"

namespace holonomic {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Dense two-phase simplex in exact rationals with Bland's rule.
///
///   maximize c·x  subject to  A x = b,  x >= 0.
///
/// Rows that phase one proves redundant are dropped. Meant for desk-scale
/// problems (a few hundred columns); zero entries are skipped in pivots,
/// which is what keeps network matrices cheap.
class DenseSimplex {
 public:
  DenseSimplex(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational> c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    if (A_.size() != b_.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : A_)
      if (row.size() != c_.size()) throw std::invalid_argument("column count mismatch");
  }

  LpSolution solve() {
    const int m = static_cast<int>(A_.size());
    const int n = static_cast<int>(c_.size());
    cols_ = n + m;
    rows_.assign(m, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      const bool flip = b_[i] < Rational(0);
      for (int j = 0; j < n; ++j) rows_[i][j] = flip ? -A_[i][j] : A_[i][j];
      rows_[i][n + i] = Rational(1);
      rows_[i][cols_] = flip ? -b_[i] : b_[i];
      basis_[i] = n + i;
    }

    // Phase one: maximize −Σ artificials.
    std::vector<Rational> phase1(cols_, Rational(0));
    for (int i = 0; i < m; ++i) phase1[n + i] = Rational(-1);
    if (run(phase1, cols_) == LpStatus::unbounded) throw std::logic_error("phase one cannot be unbounded");
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
      if (basis_[i] >= n && !rows_[i][cols_].is_zero()) return {LpStatus::infeasible, {}, {}};

    // Drive zero-level artificials out of the basis; drop rows that cannot be.
    for (int i = 0; i < static_cast<int>(rows_.size());) {
      if (basis_[i] < n) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < n && col < 0; ++j)
        if (!rows_[i][j].is_zero()) col = j;
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }

    std::vector<Rational> phase2(cols_, Rational(0));
    for (int j = 0; j < n; ++j) phase2[j] = c_[j];
    LpSolution out;
    out.status = run(phase2, n);
    if (out.status == LpStatus::unbounded) return out;
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n) out.x[basis_[i]] = rows_[i][cols_];
    out.value = Rational(0);
    for (int j = 0; j < n; ++j) out.value += c_[j] * out.x[j];
    return out;
  }

 private:
  // Maximizes `cost` over the current basis; only columns < `enterable` may enter.
  LpStatus run(const std::vector<Rational>& cost, int enterable) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < enterable && enter < 0; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (!rows_[i][j].is_zero()) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > Rational(0)) enter = j;
      }
      if (enter < 0) return LpStatus::optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        if (rows_[i][enter] <= Rational(0)) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  bool is_basic(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(int r, int col) {
    auto& prow = rows_[r];
    const Rational p = prow[col];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j)
      if (!prow[j].is_zero()) {
        prow[j] /= p;
        nz.push_back(j);
      }
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i == r || rows_[i][col].is_zero()) continue;
      const Rational f = rows_[i][col];
      for (int j : nz) rows_[i][j] -= f * prow[j];
    }
    basis_[r] = col;
  }

  std::vector<std::vector<Rational>> A_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  int cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
};

inline LpSolution solve_lp(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                           std::vector<Rational> c) {
  return DenseSimplex(std::move(A), std::move(b), std::move(c)).solve();
}

}  // namespace holonomic

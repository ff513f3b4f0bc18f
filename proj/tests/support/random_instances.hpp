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

// Seeded random systems, potentials and node functions.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "holonomic/holonomic.hpp"

namespace randinst {

using holonomic::LocallyConstantPotential;
using holonomic::Rational;
using holonomic::SubshiftSystem;
using holonomic::Word;

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_abs_num, int max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
  }

  /// Random 0/1 matrix without dead symbols; `transitive` retries until the
  /// symbol graph is strongly connected.
  SubshiftSystem system(int r, bool transitive = false) {
    for (;;) {
      std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
      for (auto& row : m)
        for (auto& v : row) v = uniform(0, 3) != 0;
      bool ok = true;
      for (int i = 0; i < r && ok; ++i) {
        bool row = false, col = false;
        for (int j = 0; j < r; ++j) {
          row = row || m[i][j];
          col = col || m[j][i];
        }
        ok = row && col;
      }
      if (!ok) continue;
      SubshiftSystem sys(m);
      if (transitive && holonomic::classify_transitivity(sys).kind == holonomic::TransitivityKind::reducible) continue;
      return sys;
    }
  }

  SubshiftSystem mixing_system(int r) {
    for (;;) {
      SubshiftSystem sys = system(r, true);
      if (holonomic::classify_transitivity(sys).kind == holonomic::TransitivityKind::mixing) return sys;
    }
  }

  LocallyConstantPotential potential(const SubshiftSystem& sys, int p, int q, int max_den = 10) {
    std::map<Word, Rational> entries;
    for (const Word& w : sys.allowed_words(p + q)) entries[w] = rational(10, max_den);
    return LocallyConstantPotential(sys, p, q, entries);
  }

  holonomic::ExactFunction function(const std::vector<Word>& nodes, int max_den = 6) {
    holonomic::ExactFunction f(nodes, Rational(0));
    for (auto& v : f.values) v = rational(6, max_den);
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace randinst

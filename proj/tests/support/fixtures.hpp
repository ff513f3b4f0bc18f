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

// Small named instances shared by the tests.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "holonomic/holonomic.hpp"

namespace fixtures {

using holonomic::LocallyConstantPotential;
using holonomic::Rational;
using holonomic::SubshiftSystem;
using holonomic::Word;

struct Instance {
  std::string name;
  SubshiftSystem system;
  LocallyConstantPotential potential;
};

inline SubshiftSystem full2() { return SubshiftSystem::full_shift(2); }

/// Golden mean on {0, 1}: the word 11 is forbidden.
inline SubshiftSystem golden() { return SubshiftSystem({{1, 1}, {1, 0}}); }

/// q = 1, Ā(1|1) = 1, everything else 0.
inline Instance f1() {
  return {"F1", full2(), LocallyConstantPotential(full2(), 1, 1, {{{1, 1}, Rational(1)}})};
}

/// Constant 5 on the full 2-shift.
inline Instance f3() { return {"F3", full2(), LocallyConstantPotential(full2(), 1, 1, {}, Rational(5))}; }

/// Two unit loops, cross edges 0.
inline Instance f5() {
  return {"F5", full2(), LocallyConstantPotential(full2(), 1, 1, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}})};
}

/// Ā(1|0) = 2, Ā(1|1) = 1.
inline Instance f6() {
  return {"F6", full2(), LocallyConstantPotential(full2(), 1, 1, {{{1, 0}, Rational(2)}, {{1, 1}, Rational(1)}})};
}

/// p = 2, q = 1: A(y1, y0 | x0) = 1 at (1, 1 | 1), else 0.
inline Instance tail_counterexample() {
  return {"tail_counterexample", full2(), LocallyConstantPotential(full2(), 2, 1, {{{1, 1, 1}, Rational(1)}})};
}

/// Golden mean, q = 2, a few nonzero weights.
inline Instance golden_q2() {
  auto sys = golden();
  return {"golden_q2", sys,
          LocallyConstantPotential(sys, 1, 2,
                                   {{{0, 0, 0}, Rational(1, 2)}, {{1, 0, 1}, Rational(3, 4)}, {{0, 1, 0}, Rational(1, 3)}})};
}

/// Three-cycle 0 → 1 → 2 → 0 plus a loop at 2 (mixing).
inline Instance cyclic3() {
  SubshiftSystem sys({{0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
  return {"cyclic3", sys,
          LocallyConstantPotential(sys, 1, 1,
                                   {{{0, 1}, Rational(2)}, {{1, 2}, Rational(-1)}, {{2, 0}, Rational(1, 2)}, {{2, 2}, Rational(1, 3)}})};
}

inline std::vector<Instance> all() { return {f1(), f3(), f5(), f6(), tail_counterexample(), golden_q2(), cyclic3()}; }

/// Fixtures on mixing systems.
inline std::vector<Instance> mixing() {
  std::vector<Instance> out;
  for (auto& inst : all())
    if (holonomic::classify_transitivity(inst.system).kind == holonomic::TransitivityKind::mixing) out.push_back(inst);
  return out;
}

}  // namespace fixtures

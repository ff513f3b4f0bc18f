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


// Two decorations of the same periodic orbit: same x-marginal, different
// integrals. Only the one whose tails maximize the potential is optimal.

#include <iostream>

#include "holonomic/holonomic.hpp"

using namespace holonomic;

int main() {
  std::cout << std::boolalpha;
  const SubshiftSystem full = SubshiftSystem::full_shift(2);
  // Window y_1 y_0 | x_0; only (1, 1 | 1) scores.
  const LocallyConstantPotential A(full, 2, 1, {{{1, 1, 1}, Rational(1)}});
  const PrependGraph g = build_prepend_graph(full, A);
  const Rational beta = max_mean_cycle(g).beta;
  std::cout << "beta = " << beta << '\n';

  const DecoratedOrbitMeasure tail_one{{1}, {{1, 1}}}, tail_zero{{1}, {{0, 1}}};
  for (const auto& [name, m] : {std::pair{"tail 1", tail_one}, std::pair{"tail 0", tail_zero}}) {
    std::cout << name << ": holonomic " << is_holonomic(full, m) << ", integral " << integral(A, m)
              << ", maximizing " << is_maximizing(full, m, A, beta) << '\n';
  }
  std::cout << "same edge flow: " << (orbit_circulation(g, {tail_one}) == orbit_circulation(g, {tail_zero})) << '\n';
}

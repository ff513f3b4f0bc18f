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


// Calibrated sub-actions of a potential with two critical classes: the
// discounted limit, the maximal one, and reconstructions from boundary data.

#include <iostream>

#include "holonomic/holonomic.hpp"

using namespace holonomic;

namespace {

void print(const char* label, const ExactFunction& u) {
  std::cout << label << ':';
  for (std::size_t i = 0; i < u.size(); ++i) std::cout << ' ' << word_string(u.nodes[i]) << '=' << u[i];
  std::cout << '\n';
}

}  // namespace

int main() {
  std::cout << std::boolalpha;
  const SubshiftSystem full = SubshiftSystem::full_shift(2);
  const LocallyConstantPotential A(full, 1, 1, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
  const PrependGraph g = build_prepend_graph(full, A);
  const OmegaSet omega = make_omega(g);
  std::cout << "beta = " << omega.beta() << ", critical classes = " << omega.critical.class_count() << '\n';

  const CalibratedResult limit = calibrated_via_discount(g);
  print("discounted limit", limit.u_exact);
  print("maximal calibrated", maximal_calibrated(g, omega));

  for (const BoundaryData& f : {BoundaryData{{Rational(0), Rational(1, 2)}}, BoundaryData{{Rational(0), Rational(2)}}}) {
    const ExactFunction u = reconstruct(f, g, omega);
    std::cout << "boundary (" << f.values[0] << ", " << f.values[1] << ") compatible " << compatible(f, omega)
              << '\n';
    print("  reconstructed", u);
  }
}

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

#include <catch_amalgamated.hpp>

#include <limits>

#include "holonomic/rational.hpp"
#include "holonomic/simplex.hpp"

using holonomic::Rational;

TEST_CASE("rationals are reduced with a positive denominator") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(4).str() == "4/1");
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(holonomic::pow(Rational(1, 2), 3) == Rational(1, 8));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing accepts n and n/d only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
}

TEST_CASE("continued-fraction reconstruction") {
  CHECK(Rational::from_approximation(0.3333333333333L, 1000000) == Rational(1, 3));
  CHECK(Rational::from_approximation(-1.0L, 1000000) == Rational(-1));
  CHECK(Rational::from_approximation(2.0L / 7.0L + 1e-11L, 1000000) == Rational(2, 7));
  CHECK(Rational::from_approximation(-5.0L / 2520.0L, 1000000) == Rational(-5, 2520));
}

TEST_CASE("exact simplex on small programs") {
  using holonomic::LpStatus;
  // max x + y s.t. x + 2y + s = 4, 3x + y + t = 6.
  std::vector<std::vector<Rational>> A = {{Rational(1), Rational(2), Rational(1), Rational(0)},
                                          {Rational(3), Rational(1), Rational(0), Rational(1)}};
  auto sol = holonomic::solve_lp(A, {Rational(4), Rational(6)}, {Rational(1), Rational(1), Rational(0), Rational(0)});
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.value == Rational(14, 5));
  CHECK(sol.x[0] == Rational(8, 5));
  CHECK(sol.x[1] == Rational(6, 5));

  // x = 1 and x = 2 cannot both hold.
  auto infeasible = holonomic::solve_lp({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)}, {Rational(1)});
  CHECK(infeasible.status == LpStatus::infeasible);

  // max x s.t. x − y = 0 is unbounded.
  auto unbounded = holonomic::solve_lp({{Rational(1), Rational(-1)}}, {Rational(0)}, {Rational(1), Rational(0)});
  CHECK(unbounded.status == LpStatus::unbounded);

  // Redundant equality rows are tolerated.
  auto redundant = holonomic::solve_lp({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(1), Rational(2)},
                                       {Rational(1), Rational(2)});
  REQUIRE(redundant.status == LpStatus::optimal);
  CHECK(redundant.value == Rational(2));
}

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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "holonomic/rational.hpp"
#include "holonomic/symbolic.hpp"

namespace holonomic {

/// Function on the allowed words of one fixed length (graph nodes).
///
/// `nodes` is sorted lexicographically, which is also the node numbering of
/// every PrependGraph built over the same system and depth. Scalar is
/// Rational for exact verdicts, long double inside the discounted solver.
template <typename Scalar>
struct NodeFunction {
  std::vector<Word> nodes;
  std::vector<Scalar> values;

  NodeFunction() = default;
  NodeFunction(std::vector<Word> node_words, Scalar fill)
      : nodes(std::move(node_words)), values(nodes.size(), fill) {}
  NodeFunction(std::vector<Word> node_words, std::vector<Scalar> vals)
      : nodes(std::move(node_words)), values(std::move(vals)) {
    if (nodes.size() != values.size()) throw std::invalid_argument("node/value size mismatch");
  }

  std::size_t size() const { return values.size(); }
  std::size_t depth() const { return nodes.empty() ? 0 : nodes.front().size(); }

  Scalar& operator[](std::size_t id) { return values[id]; }
  const Scalar& operator[](std::size_t id) const { return values[id]; }

  int index_of(const Word& w) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
    if (it == nodes.end() || *it != w)
      throw std::out_of_range("word " + word_string(w) + " is not a node");
    return static_cast<int>(it - nodes.begin());
  }

  const Scalar& operator()(const Word& w) const { return values[index_of(w)]; }

  Scalar max() const { return *std::max_element(values.begin(), values.end()); }
  Scalar min() const { return *std::min_element(values.begin(), values.end()); }

  NodeFunction shifted_by(const Scalar& c) const {
    NodeFunction out = *this;
    for (auto& v : out.values) v = v + c;
    return out;
  }

  friend bool operator==(const NodeFunction&, const NodeFunction&) = default;
};

using ExactFunction = NodeFunction<Rational>;
using FloatFunction = NodeFunction<long double>;

template <typename Scalar>
NodeFunction<Scalar> pointwise_max(const NodeFunction<Scalar>& a, const NodeFunction<Scalar>& b) {
  NodeFunction<Scalar> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// t·a + (1 − t)·b
template <typename Scalar>
NodeFunction<Scalar> convex_combination(const Scalar& t, const NodeFunction<Scalar>& a,
                                        const NodeFunction<Scalar>& b) {
  NodeFunction<Scalar> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t * a[i] + (Scalar(1) - t) * b[i];
  return out;
}

/// sup-norm distance
inline Rational max_distance(const ExactFunction& a, const ExactFunction& b) {
  Rational out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, abs(a[i] - b[i]));
  return out;
}

}  // namespace holonomic

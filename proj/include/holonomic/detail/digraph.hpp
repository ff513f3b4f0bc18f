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
#include <numeric>
#include <utility>
#include <vector>

namespace holonomic::detail {

using Adjacency = std::vector<std::vector<int>>;

/// Tarjan's algorithm, iterative. Component ids are renumbered so that
/// components appear in order of their smallest member node.
inline std::vector<int> strongly_connected_components(const Adjacency& adj, int* count = nullptr) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int next_index = 0, next_comp = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < adj[v].size()) {
        int w = adj[v][pos++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }

  std::vector<int> first(next_comp, n);
  for (int v = 0; v < n; ++v) first[comp[v]] = std::min(first[comp[v]], v);
  std::vector<int> order(next_comp);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rename(next_comp);
  for (int i = 0; i < next_comp; ++i) rename[order[i]] = i;
  for (int& c : comp) c = rename[c];
  if (count) *count = next_comp;
  return comp;
}

inline bool strongly_connected(const Adjacency& adj) {
  int count = 0;
  strongly_connected_components(adj, &count);
  return count <= 1;
}

}  // namespace holonomic::detail

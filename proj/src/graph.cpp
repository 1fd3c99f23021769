// Copyright 2026 The qlandscape Authors
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

#include "qlandscape/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qlandscape/rng.hpp"

namespace qlandscape {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void Graph::validate() const {
  if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) throw std::invalid_argument("edges must be stored as (u, v) with u < v");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
  }
}

Graph random_regular_graph(int num_vertices, int degree, std::uint64_t seed, int max_attempts) {
  if (num_vertices < 1 || degree < 1) throw std::invalid_argument("need positive size and degree");
  if (degree >= num_vertices) throw std::invalid_argument("degree must be below the vertex count");
  if ((static_cast<long long>(num_vertices) * degree) % 2 != 0) {
    throw std::invalid_argument("num_vertices * degree must be even");
  }

  std::mt19937_64 rng = make_engine(seed, 0x6772617068ULL);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(num_vertices) * degree);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < num_vertices; ++v) {
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    }
    // Fisher-Yates with the project RNG so shuffles are platform-stable.
    for (std::size_t i = stubs.size(); i > 1; --i) {
      const std::size_t j = uniform_index(rng, i);
      std::swap(stubs[i - 1], stubs[j]);
    }
    std::set<std::pair<int, int>> edge_set;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!edge_set.insert({u, v}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Graph g;
    g.num_vertices = num_vertices;
    g.edges.assign(edge_set.begin(), edge_set.end());
    g.validate();
    return g;
  }
  throw std::runtime_error("regular-graph rejection sampling exceeded the attempt bound");
}

}  // namespace qlandscape

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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qlandscape {

/// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted and
/// duplicate-free; no self-loops.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Uniform simple k-regular graph via the pairing (configuration) model with
/// full rejection of self-loops and multi-edges. Deterministic per seed.
/// Gives up after max_attempts rejected pairings.
Graph random_regular_graph(int num_vertices, int degree, std::uint64_t seed,
                           int max_attempts = 10'000);

}  // namespace qlandscape

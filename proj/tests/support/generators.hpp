// Copyright 2026 The paritycut Authors
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

// Random instance generators and small independent reference checks shared by
// the unit and acceptance suites. Nothing here calls into the code under test
// beyond the core data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "paritycut/core.hpp"

namespace paritycut::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex a = order[i];
    const Vertex b = order[uniform(rng, 0, i - 1)];
    adj[a][b] = adj[b][a] = true;
    edges.push_back({a, b});
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[u][v] && coin(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

inline ParityLabelling random_labelling(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1U);
  std::shuffle(labels.begin(), labels.end(), rng);
  return ParityLabelling(std::move(labels));
}

inline SignedGraph with_signs(const Graph& g, std::vector<Sign> signs) {
  return SignedGraph(g, std::move(signs));
}

// Mix of arbitrary, balanced-but-skewed and parity-induced signatures so that
// every verdict branch is exercised.
inline SignedGraph random_signed_connected(std::size_t n, Rng& rng) {
  const Graph g = random_connected_graph(n, 0.35, rng);
  std::vector<Sign> signs(g.size());
  switch (uniform(rng, 0, 2)) {
    case 0:
      for (auto& s : signs) s = coin(rng, 0.5) ? Sign::kPositive : Sign::kNegative;
      break;
    case 1: {
      std::vector<int> side(n);
      for (auto& x : side) x = coin(rng, 0.3) ? 1 : 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        signs[i] = side[g.edge(i).u] == side[g.edge(i).v] ? Sign::kPositive : Sign::kNegative;
      }
      break;
    }
    default: {
      const auto f = random_labelling(n, rng);
      for (std::size_t i = 0; i < g.size(); ++i) {
        signs[i] = parity_sign(f.is_odd(g.edge(i).u) == f.is_odd(g.edge(i).v));
      }
      break;
    }
  }
  return SignedGraph(g, std::move(signs));
}

// Signs from the bits of a pattern: bit i set means edge i is negative.
inline std::vector<Sign> signs_from_bits(std::size_t m, std::uint64_t bits) {
  std::vector<Sign> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = ((bits >> i) & 1U) ? Sign::kNegative : Sign::kPositive;
  return out;
}

// Every bijection V -> {1..n}: n! work, only for tiny graphs.
inline bool bijection_oracle(const SignedGraph& s) {
  const Graph& g = s.graph();
  std::vector<std::uint32_t> labels(g.order());
  std::iota(labels.begin(), labels.end(), 1U);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < g.size() && ok; ++i) {
      const bool same = (labels[g.edge(i).u] & 1U) == (labels[g.edge(i).v] & 1U);
      ok = same == (s.sign(i) == Sign::kPositive);
    }
    if (ok) return true;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return false;
}

// Balance through fundamental cycles of a BFS spanning tree: each non-tree
// edge closes a cycle whose negative-edge count is the parity of the tree
// paths plus the edge itself.
inline bool fundamental_cycles_balanced(const SignedGraph& s) {
  const Graph& g = s.graph();
  const std::size_t n = g.order();
  std::vector<int> parity(n, -1);  // parity of negative edges on the tree path from 0
  std::vector<bool> tree_edge(g.size(), false);
  std::vector<Vertex> queue{0};
  parity[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (parity[w] >= 0) continue;
      const auto idx = *g.edge_index(v, w);
      tree_edge[idx] = true;
      parity[w] = parity[v] ^ (s.sign(idx) == Sign::kNegative ? 1 : 0);
      queue.push_back(w);
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (tree_edge[i]) continue;
    const int cycle = parity[g.edge(i).u] ^ parity[g.edge(i).v] ^ (s.sign(i) == Sign::kNegative ? 1 : 0);
    if (cycle != 0) return false;
  }
  return true;
}

// Minimum cut over every near-balanced bipartition, by direct edge loop over
// all 2^n vertex subsets. Returns (cut, lexicographically smallest block 0
// under the block-0 convention of the exact solver).
struct BruteCut {
  std::size_t cut;
  std::vector<Vertex> block0;
};

inline BruteCut brute_force_min_bisection(const Graph& g) {
  const std::size_t n = g.order();
  BruteCut best{static_cast<std::size_t>(-1), {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n / 2) continue;
    if (n % 2 == 0 && (mask & 1U) == 0) continue;
    std::size_t cut = 0;
    for (const auto& e : g.edges()) cut += ((mask >> e.u) & 1U) != ((mask >> e.v) & 1U);
    std::vector<Vertex> block;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) block.push_back(v);
    }
    if (cut < best.cut || (cut == best.cut && block < best.block0)) best = {cut, block};
  }
  return best;
}

}  // namespace paritycut::testing

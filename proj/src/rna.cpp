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

#include <algorithm>
#include <numeric>
#include <random>

#include "paritycut/recognition.hpp"
#include "paritycut/rna.hpp"

namespace paritycut {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void no_formula(const FamilyDescriptor& d) {
  fail(ErrorCode::kNoKnownFormula, "no closed form for " + describe(d));
}

struct BridgeScan {
  std::vector<Edge> bridges;
  std::vector<std::size_t> subtree;  // DFS subtree order for the child endpoint
  std::vector<Vertex> child;         // child endpoint of each bridge
};

// Iterative lowlink DFS from vertex 0 over the component of 0.
BridgeScan scan_bridges(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> size(n, 1);
  std::vector<Vertex> parent(n, 0);
  BridgeScan out;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::size_t clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = clock++;
    parent[root] = root;
    while (!stack.empty()) {
      auto& top = stack.back();
      const Vertex v = top.v;
      const auto nb = g.neighbors(v);
      if (top.next < nb.size()) {
        const Vertex w = nb[top.next++];
        if (disc[w] == kUnseen) {
          parent[w] = v;
          disc[w] = low[w] = clock++;
          stack.push_back({w, 0});
        } else if (w != parent[v] || v == root) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (v == root) continue;
      const Vertex p = parent[v];
      low[p] = std::min(low[p], low[v]);
      size[p] += size[v];
      if (low[v] > disc[p]) {
        out.bridges.push_back({std::min(p, v), std::max(p, v)});
        out.subtree.push_back(size[v]);
        out.child.push_back(v);
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> random_balanced_sides(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> side(n, 1);
  for (std::size_t i = 0; i < n / 2; ++i) side[order[i]] = 0;
  return side;
}

// D(v) = external - internal degree.
std::vector<long long> swap_gains(const Graph& g, const std::vector<std::uint8_t>& side) {
  std::vector<long long> d(g.order(), 0);
  for (const auto& e : g.edges()) {
    const long long delta = side[e.u] != side[e.v] ? 1 : -1;
    d[e.u] += delta;
    d[e.v] += delta;
  }
  return d;
}

void local_search(const Graph& g, std::vector<std::uint8_t>& side) {
  const std::size_t n = g.order();
  for (;;) {
    const auto d = swap_gains(g, side);
    long long best_gain = 0;
    Vertex best_a = 0;
    Vertex best_b = 0;
    for (Vertex a = 0; a < n; ++a) {
      if (side[a] != 0) continue;
      for (Vertex b = 0; b < n; ++b) {
        if (side[b] != 1) continue;
        const long long gain = d[a] + d[b] - (g.has_edge(a, b) ? 2 : 0);
        if (gain > best_gain) {
          best_gain = gain;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_gain <= 0) return;
    side[best_a] = 1;
    side[best_b] = 0;
  }
}

}  // namespace

std::size_t rna_formula(const FamilyDescriptor& d) {
  return std::visit(Overloaded{
                        [](const family::Star& s) -> std::size_t {
                          const std::size_t edges = s.positive + s.negative;
                          if (edges == 0) no_formula(s);
                          return (edges + 1) / 2;
                        },
                        [](const family::Path& p) -> std::size_t {
                          if (p.n < 2) no_formula(p);
                          return 1;
                        },
                        [](const family::Cycle& c) -> std::size_t {
                          if (c.n < 3) no_formula(c);
                          return 2;
                        },
                        [](const family::Wheel& w) -> std::size_t {
                          if (w.n < 4) no_formula(w);
                          return (w.n + 4) / 2;
                        },
                        [&d](const auto&) -> std::size_t { no_formula(d); },
                    },
                    d);
}

std::vector<Edge> bridges(const Graph& g) {
  auto found = scan_bridges(g).bridges;
  std::sort(found.begin(), found.end());
  return found;
}

bool rna_is_one(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "graph is not connected");
  const std::size_t n = g.order();
  const auto scan = scan_bridges(g);
  return std::any_of(scan.subtree.begin(), scan.subtree.end(), [n](std::size_t side) {
    const std::size_t other = n - side;
    return std::max(side, other) - std::min(side, other) <= 1;
  });
}

CutReport rna_heuristic(const Graph& g, const HeuristicOptions& options) {
  const std::size_t n = g.order();
  std::mt19937_64 rng(options.seed);
  std::optional<Bipartition> best;
  std::size_t best_cut = 0;
  const std::size_t rounds = std::max<std::size_t>(1, options.iterations);
  for (std::size_t round = 0; round < rounds; ++round) {
    auto side = random_balanced_sides(n, rng);
    local_search(g, side);
    Bipartition candidate(std::move(side));
    if (n % 2 == 0 && candidate.side(0) != 0) candidate = candidate.swapped();
    const std::size_t cut = candidate.cut_size(g);
    if (!best || cut < best_cut) {
      best = std::move(candidate);
      best_cut = cut;
    }
  }
  return CutReport{std::move(*best), best_cut, Method::kHeuristic, false};
}

bool is_cordial(const SignedGraph& s) {
  if (!is_parity_signed(s)) fail(ErrorCode::kNotParitySigned, "cordiality needs a parity signed graph");
  const auto pos = s.positive_count();
  const auto neg = s.negative_count();
  return std::max(pos, neg) - std::min(pos, neg) <= 1;
}

bool is_absolutely_cordial(const Graph& g, const ExactOptions& options) {
  const std::size_t minus = rna_exact(g, options).cut_size;
  const std::size_t plus = g.size() - minus;
  return std::max(minus, plus) - std::min(minus, plus) <= 1;
}

SignedGraph parity_complement(const SignedGraph& s, const ParityLabelling& mu) {
  const Graph& g = s.graph();
  if (mu.size() != g.order() || induced_signature(g, mu) != s) {
    fail(ErrorCode::kLabellingNotWitness, "labelling does not induce the given signature");
  }
  std::vector<SignedEdge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v, parity_sign(mu.is_odd(u) == mu.is_odd(v))});
    }
  }
  return build_signed_graph(g.order(), edges);
}

}  // namespace paritycut

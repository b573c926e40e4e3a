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

#include "paritycut/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace paritycut {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInvalidLabelling: return "InvalidLabelling";
    case ErrorCode::kLabellingMismatch: return "LabellingMismatch";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotPathOrCycle: return "NotPathOrCycle";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNotAllNegative: return "NotAllNegative";
    case ErrorCode::kUnbalanced: return "Unbalanced";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoKnownFormula: return "NoKnownFormula";
    case ErrorCode::kNotParitySigned: return "NotParitySigned";
    case ErrorCode::kLabellingNotWitness: return "LabellingNotWitness";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kCountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

char sign_char(Sign s) noexcept { return s == Sign::kPositive ? '+' : '-'; }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) fail(ErrorCode::kEmptyGraph, "graph must have at least one vertex");
  for (auto& e : edges_) {
    if (e.u >= n_) fail(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(e.u));
    if (e.v >= n_) fail(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(e.v));
    if (e.u == e.v) fail(ErrorCode::kSelfLoop, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) fail(ErrorCode::kDuplicateEdge, edge_text(dup->u, dup->v));

  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  adjacency_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so each neighbour list comes out sorted when
  // the smaller endpoints are emitted in a first pass.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[fill[e.v]] = e.u;
    adjacency_edge_[fill[e.v]++] = i;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[fill[e.u]] = e.v;
    adjacency_edge_[fill[e.u]++] = i;
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return adjacency_edge_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

SignedGraph::SignedGraph(Graph graph, std::vector<Sign> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.size()) {
    fail(ErrorCode::kInvalidParameters, "sign count " + std::to_string(signs_.size()) +
                                            " does not match edge count " +
                                            std::to_string(graph_.size()));
  }
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  auto idx = graph_.edge_index(u, v);
  if (!idx) return std::nullopt;
  return signs_[*idx];
}

std::size_t SignedGraph::positive_count() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::kPositive));
}

std::vector<SignedEdge> SignedGraph::signed_edges() const {
  std::vector<SignedEdge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& e = graph_.edge(i);
    out.push_back({e.u, e.v, signs_[i]});
  }
  return out;
}

ParityLabelling::ParityLabelling(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  std::vector<bool> seen(labels_.size() + 1, false);
  for (auto l : labels_) {
    if (l == 0 || l > labels_.size() || seen[l]) {
      fail(ErrorCode::kInvalidLabelling,
           "labels must be a permutation of 1.." + std::to_string(labels_.size()));
    }
    seen[l] = true;
  }
}

Bipartition::Bipartition(std::vector<std::uint8_t> side) : side_(std::move(side)) {
  for (auto s : side_) {
    if (s > 1) fail(ErrorCode::kInvalidParameters, "block index must be 0 or 1");
  }
}

Bipartition Bipartition::from_block0_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::uint8_t> side(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) side[v] = 0;
  }
  return Bipartition(std::move(side));
}

std::size_t Bipartition::block_size(int block) const {
  return static_cast<std::size_t>(
      std::count(side_.begin(), side_.end(), static_cast<std::uint8_t>(block)));
}

std::vector<Vertex> Bipartition::block(int block) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < side_.size(); ++v) {
    if (side_[v] == block) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Bipartition Bipartition::swapped() const {
  auto side = side_;
  for (auto& s : side) s ^= 1U;
  return Bipartition(std::move(side));
}

std::size_t Bipartition::cut_size(const Graph& g) const {
  std::size_t cut = 0;
  for (const auto& e : g.edges()) cut += side_[e.u] != side_[e.v];
  return cut;
}

SignedGraph build_signed_graph(std::size_t n, std::span<const SignedEdge> signed_edges) {
  std::vector<Edge> edges;
  edges.reserve(signed_edges.size());
  for (const auto& se : signed_edges) edges.push_back({se.u, se.v});
  Graph g(n, std::move(edges));
  std::vector<Sign> signs(g.size());
  for (const auto& se : signed_edges) signs[*g.edge_index(se.u, se.v)] = se.sign;
  return SignedGraph(std::move(g), std::move(signs));
}

SignedGraph induced_signature(const Graph& g, const ParityLabelling& f) {
  if (f.size() != g.order()) {
    fail(ErrorCode::kLabellingMismatch, "labelling has " + std::to_string(f.size()) +
                                            " vertices, graph has " + std::to_string(g.order()));
  }
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const auto& e : g.edges()) signs.push_back(parity_sign(f.is_odd(e.u) == f.is_odd(e.v)));
  return SignedGraph(g, std::move(signs));
}

std::vector<std::size_t> connected_components(const Graph& g) {
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), kUnseen);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (comp[root] != kUnseen) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == kUnseen) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

std::optional<Traversal> path_traversal(const Graph& g) {
  const std::size_t n = g.order();
  if (g.size() + 1 != n || !is_connected(g)) return std::nullopt;
  Traversal t;
  if (n == 1) {
    t.vertices = {0};
    return t;
  }
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && !start) start = v;
  }
  Vertex prev = *start;
  Vertex cur = *start;
  t.vertices.push_back(cur);
  while (t.vertices.size() < n) {
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev || cur == prev) {
        next = w;
        break;
      }
    }
    t.edges.push_back(*g.edge_index(cur, next));
    t.vertices.push_back(next);
    prev = cur;
    cur = next;
  }
  return t;
}

std::optional<Traversal> cycle_traversal(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.size() != n || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  Traversal t;
  t.cyclic = true;
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  t.vertices.push_back(0);
  t.edges.push_back(*g.edge_index(0, cur));
  while (cur != 0) {
    t.vertices.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    t.edges.push_back(*g.edge_index(cur, next));
    prev = cur;
    cur = next;
  }
  return t;
}

}  // namespace paritycut

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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paritycut/error.hpp"

namespace paritycut {

// Vertices are dense 0..n-1. File formats and labels are 1-based.
using Vertex = std::uint32_t;

enum class Sign : std::uint8_t { kPositive, kNegative };

inline Sign parity_sign(bool same_parity) noexcept {
  return same_parity ? Sign::kPositive : Sign::kNegative;
}

char sign_char(Sign s) noexcept;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::kPositive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Simple undirected graph. Edges are stored with u < v and sorted, so two
// graphs with the same vertex count and edge set compare equal.
class Graph {
 public:
  // Throws EmptyGraph, SelfLoop, DuplicateEdge or VertexOutOfRange.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  // Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  // Index into edges() of the edge {u, v}, if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> adjacency_edge_;
};

class SignedGraph {
 public:
  // signs[i] belongs to graph.edges()[i].
  SignedGraph(Graph graph, std::vector<Sign> signs);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t size() const noexcept { return graph_.size(); }

  Sign sign(std::size_t edge_index) const { return signs_[edge_index]; }
  std::optional<Sign> sign(Vertex u, Vertex v) const;
  std::span<const Sign> signs() const noexcept { return signs_; }

  std::size_t positive_count() const noexcept;
  std::size_t negative_count() const noexcept { return size() - positive_count(); }

  // Canonical (u < v, sorted) signed edge list.
  std::vector<SignedEdge> signed_edges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Sign> signs_;
};

// Bijection V -> {1..n}.
class ParityLabelling {
 public:
  // labels[v] is the label of vertex v. Throws InvalidLabelling unless the
  // values are exactly {1..n}.
  explicit ParityLabelling(std::vector<std::uint32_t> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::uint32_t label(Vertex v) const { return labels_[v]; }
  bool is_odd(Vertex v) const { return (labels_[v] & 1U) != 0; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }

  friend bool operator==(const ParityLabelling&, const ParityLabelling&) = default;

 private:
  std::vector<std::uint32_t> labels_;
};

// Two-block partition of the vertex set; side(v) is 0 or 1.
class Bipartition {
 public:
  explicit Bipartition(std::vector<std::uint8_t> side);

  // Bit v of mask set means v is in block 0. Requires n <= 64.
  static Bipartition from_block0_mask(std::size_t n, std::uint64_t mask);

  std::size_t order() const noexcept { return side_.size(); }
  std::uint8_t side(Vertex v) const { return side_[v]; }
  std::size_t block_size(int block) const;
  std::vector<Vertex> block(int block) const;

  // Same partition with the block indices exchanged.
  Bipartition swapped() const;

  // Number of edges of g with endpoints in different blocks.
  std::size_t cut_size(const Graph& g) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<std::uint8_t> side_;
};

SignedGraph build_signed_graph(std::size_t n, std::span<const SignedEdge> signed_edges);

// Edge uv is positive iff f(u) and f(v) have the same parity.
// Throws LabellingMismatch if f does not cover exactly V(g).
SignedGraph induced_signature(const Graph& g, const ParityLabelling& f);

bool is_connected(const Graph& g);

// Component id per vertex, numbered in order of first vertex.
std::vector<std::size_t> connected_components(const Graph& g);

// Vertex/edge sequence of a graph whose underlying shape is a path or a cycle.
// Paths start at the lowest-numbered endpoint; cycles start at vertex 0 and
// head towards its lower-numbered neighbour. edges[i] joins vertices[i] and
// vertices[i + 1] (cyclically for a cycle).
struct Traversal {
  bool cyclic = false;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
};

std::optional<Traversal> path_traversal(const Graph& g);
std::optional<Traversal> cycle_traversal(const Graph& g);

}  // namespace paritycut

#pragma once

#include <vector>

#include "paritycut/core.hpp"

namespace paritycut::testing {

inline constexpr Sign P = Sign::kPositive;
inline constexpr Sign N = Sign::kNegative;

// Figure 1 with vertex i carrying printed label i + 1.
inline SignedGraph figure1() {
  const std::vector<SignedEdge> edges{{0, 2, P}, {2, 4, P}, {0, 4, P}, {5, 3, P},
                                      {1, 5, P}, {1, 3, P}, {1, 2, N}, {3, 0, N}};
  return build_signed_graph(6, edges);
}

// Figure 2 with a..e as 0..4.
inline SignedGraph figure2() {
  const std::vector<SignedEdge> edges{{0, 1, P}, {1, 3, P}, {0, 2, P},
                                      {2, 3, P}, {2, 4, N}, {3, 4, N}};
  return build_signed_graph(5, edges);
}

// Figure 3, left: vertex i carries label i + 1.
inline SignedGraph figure3_left() {
  const std::vector<SignedEdge> edges{{0, 1, N}, {1, 3, P}, {2, 3, N}};
  return build_signed_graph(4, edges);
}

inline SignedGraph signed_path(const std::vector<Sign>& signs) {
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), signs[i]});
  }
  return build_signed_graph(signs.size() + 1, edges);
}

inline SignedGraph signed_cycle(const std::vector<Sign>& signs) {
  const std::size_t n = signs.size();
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), signs[i]});
  }
  return build_signed_graph(n, edges);
}

inline SignedGraph all_sign(const Graph& g, Sign s) {
  return SignedGraph(g, std::vector<Sign>(g.size(), s));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

}  // namespace paritycut::testing

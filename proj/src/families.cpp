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

#include "paritycut/families.hpp"

#include <algorithm>
#include <sstream>

#include "paritycut/balance.hpp"

namespace paritycut {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kInvalidParameters, what);
}

std::vector<Sign> resolve_signs(const std::vector<Sign>& given, std::size_t count) {
  if (given.empty()) return std::vector<Sign>(count, Sign::kNegative);
  require(given.size() == count, "sign pattern needs " + std::to_string(count) + " entries, got " +
                                     std::to_string(given.size()));
  return given;
}

SignedGraph from_edges(std::size_t n, const std::vector<SignedEdge>& edges) {
  return build_signed_graph(n, edges);
}

SignedGraph make(const family::Path& d) {
  require(d.n >= 1, "path needs at least one vertex");
  const auto signs = resolve_signs(d.signs, d.n - 1);
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i + 1 < d.n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), signs[i]});
  }
  return from_edges(d.n, edges);
}

SignedGraph make(const family::Cycle& d) {
  require(d.n >= 3, "cycle needs at least three vertices");
  const auto signs = resolve_signs(d.signs, d.n);
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < d.n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % d.n), signs[i]});
  }
  return from_edges(d.n, edges);
}

SignedGraph make(const family::Star& d) {
  const std::size_t leaves = d.positive + d.negative;
  require(leaves >= 1, "star needs at least one edge");
  std::vector<SignedEdge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.push_back({0, static_cast<Vertex>(i), i <= d.positive ? Sign::kPositive : Sign::kNegative});
  }
  return from_edges(leaves + 1, edges);
}

SignedGraph bistar(std::size_t m, std::size_t n, Sign centre, Sign u_pendant, Sign v_pendant) {
  std::vector<SignedEdge> edges{{0, 1, centre}};
  Vertex next = 2;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({0, next++, u_pendant});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({1, next++, v_pendant});
  return from_edges(next, edges);
}

SignedGraph make(const family::BistarPlus& d) {
  return bistar(d.m, d.n, Sign::kPositive, Sign::kPositive, Sign::kNegative);
}

SignedGraph make(const family::BistarAllNeg& d) {
  return bistar(d.m, d.n, Sign::kNegative, Sign::kNegative, Sign::kNegative);
}

SignedGraph make(const family::Wheel& d) {
  require(d.n >= 4, "wheel needs at least four vertices");
  const std::size_t rim = d.n - 1;
  const auto signs = resolve_signs(d.signs, 2 * rim);
  std::vector<SignedEdge> edges;
  for (std::size_t i = 1; i <= rim; ++i) edges.push_back({0, static_cast<Vertex>(i), signs[i - 1]});
  for (std::size_t i = 1; i <= rim; ++i) {
    const auto next = static_cast<Vertex>(i == rim ? 1 : i + 1);
    edges.push_back({static_cast<Vertex>(i), next, signs[rim + i - 1]});
  }
  return from_edges(d.n, edges);
}

SignedGraph make(const family::CompleteBipartiteAllNeg& d) {
  require(d.m >= 1 && d.n >= 1, "both parts of K_{m,n} must be non-empty");
  std::vector<SignedEdge> edges;
  for (std::size_t a = 0; a < d.m; ++a) {
    for (std::size_t b = 0; b < d.n; ++b) {
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(d.m + b), Sign::kNegative});
    }
  }
  return from_edges(d.m + d.n, edges);
}

SignedGraph make(const family::Ladder& d) {
  require(d.n >= 1, "ladder needs at least one rung");
  std::vector<SignedEdge> edges;
  const auto n = static_cast<Vertex>(d.n);
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back({i, n + i, Sign::kNegative});
    if (i + 1 < n) {
      edges.push_back({i, i + 1, Sign::kNegative});
      edges.push_back({n + i, n + i + 1, Sign::kNegative});
    }
  }
  return from_edges(2 * d.n, edges);
}

SignedGraph make(const family::Corona& d) {
  require(d.base != nullptr, "corona needs a base graph");
  require(d.t >= 1, "corona needs at least one pendant per vertex");
  const auto& base = *d.base;
  auto edges = base.signed_edges();
  const std::size_t nb = base.order();
  for (std::size_t v = 0; v < nb; ++v) {
    for (std::size_t j = 0; j < d.t; ++j) {
      edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(nb + v * d.t + j), Sign::kNegative});
    }
  }
  return from_edges(nb * (d.t + 1), edges);
}

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

}  // namespace

std::string describe(const FamilyDescriptor& d) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const family::Path& p) { os << "path(" << p.n << ")"; },
                 [&](const family::Cycle& c) { os << "cycle(" << c.n << ")"; },
                 [&](const family::Star& s) { os << "star(m=" << s.positive << ",n=" << s.negative << ")"; },
                 [&](const family::BistarPlus& b) { os << "bistar+(m=" << b.m << ",n=" << b.n << ")"; },
                 [&](const family::BistarAllNeg& b) { os << "bistar*(m=" << b.m << ",n=" << b.n << ")"; },
                 [&](const family::Wheel& w) { os << "wheel(" << w.n << ")"; },
                 [&](const family::CompleteBipartiteAllNeg& k) { os << "kmn-neg(" << k.m << "," << k.n << ")"; },
                 [&](const family::Ladder& l) { os << "ladder(" << l.n << ")"; },
                 [&](const family::Corona& c) {
                   os << "corona(base=" << (c.base ? c.base->order() : 0) << ",t=" << c.t << ")";
                 },
             },
             d);
  return os.str();
}

SignedGraph generate(const FamilyDescriptor& d) {
  return std::visit([](const auto& x) { return make(x); }, d);
}

bool cycle_is_parity_signed(const SignedGraph& s) {
  if (!cycle_traversal(s.graph())) fail(ErrorCode::kNotACycle, "underlying graph is not a cycle");
  const auto odd = odd_negative_sections(s);
  if (odd.k() % 2 != 0) return false;
  if (odd.k() == 0) {
    const std::size_t n = s.order();
    const std::size_t positives = s.positive_count();
    return (n % 2 == 0 && positives == 0) || (n % 2 == 1 && positives == 1);
  }
  const auto lo = std::min(odd.m_odd, odd.m_even);
  const auto hi = std::max(odd.m_odd, odd.m_even);
  return hi - lo <= 1;
}

bool path_is_parity_signed(const SignedGraph& s) {
  if (!path_traversal(s.graph())) fail(ErrorCode::kNotAPath, "underlying graph is not a path");
  const auto odd = odd_negative_sections(s);
  const auto diff = static_cast<long long>(odd.m_even) - static_cast<long long>(odd.m_odd);
  if (odd.k() % 2 == 1) return diff >= -1 && diff <= 1;
  return diff >= -2 && diff <= 0;
}

bool star_is_parity_signed(std::size_t m, std::size_t n) { return n >= m && n - m <= 2; }

bool bistar_plus_is_parity_signed(std::size_t m, std::size_t n) {
  if ((m + n) % 2 == 1) return n == m + 1 || n == m + 3;
  return n == m + 2;
}

bool bistar_allneg_is_parity_signed(std::size_t m, std::size_t n) {
  return n == m || n == m + 1 || m == n + 1;
}

bool negative_homogeneous_is_parity_signed(const SignedGraph& s) {
  if (s.positive_count() != 0) fail(ErrorCode::kNotAllNegative, "signed graph has positive edges");
  const Graph& g = s.graph();
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "signed graph is not connected");
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> colour(g.order(), kUnset);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (colour[w] == kUnset) {
        colour[w] = colour[v] ^ 1U;
        queue.push_back(w);
      } else if (colour[w] == colour[v]) {
        return false;
      }
    }
  }
  const auto zeros = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));
  const auto ones = g.order() - zeros;
  return std::max(zeros, ones) - std::min(zeros, ones) <= 1;
}

std::vector<ShapeVerdict> classify(const SignedGraph& s) {
  std::vector<ShapeVerdict> out;
  const Graph& g = s.graph();
  const std::size_t n = g.order();

  if (path_traversal(g)) out.push_back({"path(" + std::to_string(n) + ")", path_is_parity_signed(s)});
  if (cycle_traversal(g)) out.push_back({"cycle(" + std::to_string(n) + ")", cycle_is_parity_signed(s)});

  if (n >= 2 && is_tree(g)) {
    for (Vertex c = 0; c < n; ++c) {
      if (g.degree(c) != n - 1) continue;
      const std::size_t pos = s.positive_count();
      const std::size_t neg = s.negative_count();
      std::ostringstream os;
      os << "star(m=" << pos << ",n=" << neg << ")";
      out.push_back({os.str(), star_is_parity_signed(pos, neg)});
      break;
    }

    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) >= 2) inner.push_back(v);
    }
    if (inner.size() == 2 && g.has_edge(inner[0], inner[1])) {
      // Sign summary of the pendants hanging off each centre.
      auto pendants = [&](Vertex c, Vertex other) {
        std::size_t pos = 0;
        std::size_t neg = 0;
        for (Vertex w : g.neighbors(c)) {
          if (w == other) continue;
          (*s.sign(c, w) == Sign::kPositive ? pos : neg) += 1;
        }
        return std::pair{pos, neg};
      };
      const Vertex a = inner[0];
      const Vertex b = inner[1];
      const auto [a_pos, a_neg] = pendants(a, b);
      const auto [b_pos, b_neg] = pendants(b, a);
      const Sign centre = *s.sign(a, b);
      auto report = [&](const char* kind, std::size_t m, std::size_t k, bool verdict) {
        std::ostringstream os;
        os << kind << "(m=" << m << ",n=" << k << ")";
        out.push_back({os.str(), verdict});
      };
      if (centre == Sign::kPositive) {
        if (a_neg == 0 && b_pos == 0) {
          report("bistar+", a_pos, b_neg, bistar_plus_is_parity_signed(a_pos, b_neg));
        } else if (b_neg == 0 && a_pos == 0) {
          report("bistar+", b_pos, a_neg, bistar_plus_is_parity_signed(b_pos, a_neg));
        }
      } else if (s.positive_count() == 0) {
        report("bistar*", a_neg, b_neg, bistar_allneg_is_parity_signed(a_neg, b_neg));
      }
    }
  }

  if (s.positive_count() == 0 && is_connected(g)) {
    out.push_back({"negative-homogeneous", negative_homogeneous_is_parity_signed(s)});
  }
  return out;
}

}  // namespace paritycut

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

#include "paritycut/balance.hpp"

#include <algorithm>
#include <numeric>

namespace paritycut {

namespace {

void require_connected(const SignedGraph& s) {
  if (!is_connected(s.graph())) fail(ErrorCode::kDisconnected, "signed graph is not connected");
}

// Sections along a linear or cyclic edge sequence.
std::vector<Section> runs_along(const SignedGraph& s, const Traversal& t) {
  const std::size_t m = t.edges.size();
  std::vector<Section> out;
  if (m == 0) return out;

  std::size_t start = 0;
  if (t.cyclic) {
    for (std::size_t i = 0; i < m; ++i) {
      if (s.sign(t.edges[i]) != s.sign(t.edges[(i + m - 1) % m])) {
        start = i;
        break;
      }
    }
  }

  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t i = (start + step) % m;
    const Sign sg = s.sign(t.edges[i]);
    if (out.empty() || out.back().sign != sg) {
      Section sec;
      sec.sign = sg;
      sec.position = out.size();
      sec.vertices.push_back(t.vertices[i]);
      out.push_back(std::move(sec));
    }
    auto& sec = out.back();
    sec.edges.push_back(t.edges[i]);
    sec.vertices.push_back(t.vertices[(i + 1) % t.vertices.size()]);
  }
  for (auto& sec : out) {
    std::sort(sec.vertices.begin(), sec.vertices.end());
    sec.vertices.erase(std::unique(sec.vertices.begin(), sec.vertices.end()), sec.vertices.end());
  }
  return out;
}

std::vector<Section> general_sections(const SignedGraph& s) {
  const Graph& g = s.graph();
  const std::size_t m = g.size();
  // Union-find over edges: two same-sign edges sharing a vertex belong to the
  // same section.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int pass = 0; pass < 2; ++pass) {
    const Sign sg = pass == 0 ? Sign::kPositive : Sign::kNegative;
    std::vector<std::size_t> first(g.order(), m);
    for (std::size_t i = 0; i < m; ++i) {
      if (s.sign(i) != sg) continue;
      for (Vertex x : {g.edge(i).u, g.edge(i).v}) {
        if (first[x] == m) {
          first[x] = i;
        } else {
          auto a = find(first[x]);
          auto b = find(i);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  }

  std::vector<Section> out;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto root = find(i);
    if (slot[root] == m) {
      slot[root] = out.size();
      Section sec;
      sec.sign = s.sign(i);
      sec.position = out.size();
      out.push_back(std::move(sec));
    }
    auto& sec = out[slot[root]];
    sec.edges.push_back(i);
    sec.vertices.push_back(g.edge(i).u);
    sec.vertices.push_back(g.edge(i).v);
  }
  for (auto& sec : out) {
    std::sort(sec.vertices.begin(), sec.vertices.end());
    sec.vertices.erase(std::unique(sec.vertices.begin(), sec.vertices.end()), sec.vertices.end());
  }
  return out;
}

}  // namespace

std::optional<Bipartition> harary_bipartition(const SignedGraph& s) {
  require_connected(s);
  const Graph& g = s.graph();
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.order(), kUnset);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      const bool cross = *s.sign(v, w) == Sign::kNegative;
      const std::uint8_t want = side[v] ^ static_cast<std::uint8_t>(cross);
      if (side[w] == kUnset) {
        side[w] = want;
        stack.push_back(w);
      } else if (side[w] != want) {
        return std::nullopt;
      }
    }
  }
  return Bipartition(std::move(side));
}

bool is_balanced(const SignedGraph& s) { return harary_bipartition(s).has_value(); }

std::size_t SectionDecomposition::count(Sign sign) const {
  return static_cast<std::size_t>(std::count_if(
      sections.begin(), sections.end(), [sign](const Section& sec) { return sec.sign == sign; }));
}

SectionDecomposition sections(const SignedGraph& s) {
  SectionDecomposition d;
  if (auto t = path_traversal(s.graph())) {
    d.layout = SectionLayout::kPath;
    d.sections = runs_along(s, *t);
  } else if (auto c = cycle_traversal(s.graph())) {
    d.layout = SectionLayout::kCycle;
    d.sections = runs_along(s, *c);
  } else {
    d.sections = general_sections(s);
  }
  return d;
}

OddNegativeSections odd_negative_sections(const SignedGraph& s) {
  const auto d = sections(s);
  if (d.layout == SectionLayout::kGeneral) {
    fail(ErrorCode::kNotPathOrCycle, "underlying graph is neither a path nor a cycle");
  }
  OddNegativeSections out;
  out.cyclic = d.layout == SectionLayout::kCycle;

  auto is_odd_negative = [](const Section& sec) {
    return sec.sign == Sign::kNegative && sec.length() % 2 == 1;
  };

  if (!out.cyclic) {
    out.gaps.push_back(0);
    for (const auto& sec : d.sections) {
      if (is_odd_negative(sec)) {
        out.odd_sections.push_back(sec);
        out.gaps.push_back(0);
      } else if (sec.sign == Sign::kPositive) {
        out.gaps.back() += sec.length();
      }
    }
    for (std::size_t i = 0; i < out.gaps.size(); ++i) {
      (i % 2 == 1 ? out.m_odd : out.m_even) += out.gaps[i];
    }
    return out;
  }

  // Cycle: rotate the section list so it starts at the first odd negative
  // section, then accumulate positive edges up to the next one.
  const auto& secs = d.sections;
  auto first = std::find_if(secs.begin(), secs.end(), is_odd_negative);
  if (first == secs.end()) return out;
  const std::size_t base = static_cast<std::size_t>(first - secs.begin());
  for (std::size_t step = 0; step < secs.size(); ++step) {
    const auto& sec = secs[(base + step) % secs.size()];
    if (is_odd_negative(sec)) {
      out.odd_sections.push_back(sec);
      out.gaps.push_back(0);
    } else if (sec.sign == Sign::kPositive) {
      out.gaps.back() += sec.length();
    }
  }
  for (std::size_t i = 0; i < out.gaps.size(); ++i) {
    // gaps[i] is m_{i+1}
    ((i + 1) % 2 == 1 ? out.m_odd : out.m_even) += out.gaps[i];
  }
  return out;
}

}  // namespace paritycut

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

#include <cstddef>
#include <optional>
#include <vector>

#include "paritycut/core.hpp"

namespace paritycut {

// Block 0 contains vertex 0. Every positive edge lies inside a block and every
// negative edge crosses. Returns nullopt when s is unbalanced.
// Throws Disconnected.
std::optional<Bipartition> harary_bipartition(const SignedGraph& s);

// True iff every cycle carries an even number of negative edges.
// Throws Disconnected.
bool is_balanced(const SignedGraph& s);

struct Section {
  Sign sign = Sign::kPositive;
  std::vector<Vertex> vertices;     // sorted
  std::vector<std::size_t> edges;   // indices into graph().edges(), traversal order for paths/cycles
  std::size_t position = 0;         // index in the decomposition's order

  std::size_t order() const noexcept { return vertices.size(); }
  std::size_t length() const noexcept { return edges.size(); }
};

enum class SectionLayout { kGeneral, kPath, kCycle };

// Maximal connected single-sign edge-induced subgraphs. For paths and cycles
// the sections are listed along path_traversal()/cycle_traversal(); a cycle
// listing begins with the first section that starts at or after the traversal
// origin. Otherwise sections are ordered by their lowest edge index.
struct SectionDecomposition {
  SectionLayout layout = SectionLayout::kGeneral;
  std::vector<Section> sections;

  std::size_t count(Sign sign) const;
};

SectionDecomposition sections(const SignedGraph& s);

// Odd-length negative sections N_1..N_k of a signed path or cycle, with the
// positive-edge counts of the stretches between them.
//
// Path: gaps has k + 1 entries; gaps[0] counts positive edges before N_1 and
// gaps[k] those after N_k. When k = 0, gaps[0] is the whole path.
// Cycle: gaps has k entries; gaps[i - 1] counts positive edges from N_i to
// N_{i+1} (N_k wraps to N_1). Empty when k = 0.
// m_odd / m_even sum gaps with odd / even index (1-based for cycles, 0-based
// for paths, i.e. the index i of m_i).
struct OddNegativeSections {
  bool cyclic = false;
  std::vector<Section> odd_sections;
  std::vector<std::size_t> gaps;
  std::size_t m_odd = 0;
  std::size_t m_even = 0;

  std::size_t k() const noexcept { return odd_sections.size(); }
};

// Throws NotPathOrCycle.
OddNegativeSections odd_negative_sections(const SignedGraph& s);

}  // namespace paritycut

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
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "paritycut/core.hpp"
#include "paritycut/families.hpp"
#include "paritycut/kernels.hpp"

namespace paritycut {

// The rna number of G is the smallest cut over bipartitions whose blocks
// differ in size by at most one (the fewest negative edges any parity
// labelling can induce). The adhika number is |E| minus that.

enum class Method { kExact, kFormula, kHeuristic };

std::string_view to_string(Method method) noexcept;

// Block 0 has floor(n/2) vertices. When n is even it contains vertex 0.
struct CutReport {
  Bipartition bipartition;
  std::size_t cut_size = 0;
  Method method = Method::kExact;
  bool optimal = false;
};

enum class ExactStrategy {
  kEnumerate,       // every admissible block-0 set, batched through the cut kernels
  kBranchAndBound,  // depth-first assignment pruned by a partial-cut lower bound
};

inline constexpr std::size_t kDefaultExactLimit = 28;
inline constexpr std::size_t kMaxExactVertices = 64;

struct ExactOptions {
  std::size_t limit = kDefaultExactLimit;
  ExactStrategy strategy = ExactStrategy::kEnumerate;
  unsigned threads = 0;                      // 0: hardware concurrency
  std::optional<kernels::Backend> backend;   // nullopt: best available
};

// Among optimal cuts the lexicographically smallest block-0 vertex set is
// reported, independent of strategy, backend and thread count.
// Throws TooLarge when n exceeds options.limit (or 64).
CutReport rna_exact(const Graph& g, const ExactOptions& options = {});

// |E| - rna_exact(g).
std::size_t adhika(const Graph& g, const ExactOptions& options = {});

// Star K_{1,n}: ceil(n/2). Path of order >= 2: 1. Cycle: 2. Wheel W_n:
// floor((n+4)/2). Throws NoKnownFormula for other families.
std::size_t rna_formula(const FamilyDescriptor& d);

// Bridges of g as canonical edges (u < v), sorted.
std::vector<Edge> bridges(const Graph& g);

// True iff g has a bridge whose removal leaves components of orders differing
// by at most one. Linear time. Throws Disconnected.
bool rna_is_one(const Graph& g);

struct HeuristicOptions {
  std::uint64_t seed = 1;
  std::size_t iterations = 32;  // random restarts
};

// Balanced pair-swap local search from random starts. Deterministic for a
// fixed seed. The cut is an upper bound on the rna number; optimal is false.
CutReport rna_heuristic(const Graph& g, const HeuristicOptions& options = {});

// ||E-| - |E+|| <= 1 for the given signature. Throws NotParitySigned (and
// Disconnected, via recognition).
bool is_cordial(const SignedGraph& s);

// |rna - adhika| <= 1. Throws TooLarge.
bool is_absolutely_cordial(const Graph& g, const ExactOptions& options = {});

// Complement of the underlying graph, each edge signed by mu's parities.
// Throws LabellingNotWitness unless mu induces exactly s.
SignedGraph parity_complement(const SignedGraph& s, const ParityLabelling& mu);

}  // namespace paritycut

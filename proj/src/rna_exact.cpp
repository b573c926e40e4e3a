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
#include <array>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

#include "paritycut/rna.hpp"

namespace paritycut {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kBatch = 512;
constexpr std::uint64_t kMinRanksPerWorker = 1U << 16;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Equal-size sets only: the set holding the smallest differing vertex sorts
// first.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

struct Candidate {
  std::size_t cut = std::numeric_limits<std::size_t>::max();
  Mask block0 = 0;

  bool better_than(const Candidate& other) const {
    return cut < other.cut || (cut == other.cut && lex_less(block0, other.block0));
  }
};

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

const BinomialTable& binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (std::size_t n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

// k-subset of {0..} with the given colexicographic rank.
Mask unrank_colex(std::uint64_t rank, std::size_t k) {
  const auto& c = binomials();
  Mask mask = 0;
  for (std::size_t i = k; i >= 1; --i) {
    std::size_t top = i - 1;
    while (top + 1 <= 64 && c[top + 1][i] <= rank) ++top;
    mask |= Mask{1} << top;
    rank -= c[top][i];
  }
  return mask;
}

// Next larger integer with the same popcount.
Mask next_same_popcount(Mask x) {
  const Mask low = x & (~x + 1);
  const Mask ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

struct SearchSpace {
  std::size_t free_vertices;  // enumerated ground set size
  std::size_t choose;         // subset size
  bool pin_vertex0;           // block 0 always holds vertex 0; ground set is 1..n-1

  Mask to_block0(Mask subset) const { return pin_vertex0 ? (subset << 1) | 1U : subset; }
};

SearchSpace search_space(std::size_t n) {
  const std::size_t block0 = n / 2;
  if (n % 2 == 0) return {n - 1, block0 - 1, true};
  return {n, block0, false};
}

Candidate enumerate_range(std::span<const Mask> adj, const SearchSpace& space, std::uint64_t lo,
                          std::uint64_t hi, kernels::Backend backend) {
  Candidate best;
  std::vector<Mask> batch;
  std::vector<std::uint32_t> cuts;
  batch.reserve(kBatch);
  cuts.resize(kBatch);

  auto flush = [&] {
    kernels::cut_sizes(backend, adj, batch, std::span(cuts).first(batch.size()));
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Candidate c{cuts[i], batch[i]};
      if (c.better_than(best)) best = c;
    }
    batch.clear();
  };

  Mask subset = unrank_colex(lo, space.choose);
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    batch.push_back(space.to_block0(subset));
    if (batch.size() == kBatch) flush();
    if (rank + 1 < hi) subset = space.choose == 0 ? subset : next_same_popcount(subset);
  }
  if (!batch.empty()) flush();
  return best;
}

Candidate exact_by_enumeration(const Graph& g, const ExactOptions& options) {
  const auto adj = adjacency_masks(g);
  const auto space = search_space(g.order());
  const std::uint64_t total = binomials()[space.free_vertices][space.choose];
  const auto backend = options.backend.value_or(kernels::best_backend());

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);
  const auto useful = std::max<std::uint64_t>(1, total / kMinRanksPerWorker);
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, useful));

  if (workers == 1) return enumerate_range(adj, space, 0, total, backend);

  std::vector<Candidate> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[w] = enumerate_range(adj, space, lo, hi, backend); });
    }
  }
  Candidate best;
  for (const auto& c : partial) {
    if (c.better_than(best)) best = c;
  }
  return best;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g)
      : n_(g.order()), adj_(adjacency_masks(g)), cap0_(n_ / 2), cap1_(n_ - n_ / 2) {}

  Candidate run() {
    if (n_ % 2 == 0) {
      search(1, Mask{1}, 0, 0);
    } else {
      search(0, 0, 0, 0);
    }
    return best_;
  }

 private:
  // Every unassigned vertex adds at least min(edges into block 0, edges into
  // block 1) to the final cut.
  std::size_t lower_bound(std::size_t next, Mask block0, Mask block1, std::size_t cut) const {
    std::size_t bound = cut;
    for (std::size_t u = next; u < n_; ++u) {
      const auto to0 = static_cast<std::size_t>(std::popcount(adj_[u] & block0));
      const auto to1 = static_cast<std::size_t>(std::popcount(adj_[u] & block1));
      bound += std::min(to0, to1);
    }
    return bound;
  }

  void search(std::size_t v, Mask block0, Mask block1, std::size_t cut) {
    if (v == n_) {
      if (cut < best_.cut) best_ = {cut, block0};
      return;
    }
    if (lower_bound(v, block0, block1, cut) >= best_.cut) return;
    const Mask bit = Mask{1} << v;
    // Block 0 first: solutions are reached in ascending lexicographic order,
    // so the first one at the optimum is the reported tie-break.
    if (static_cast<std::size_t>(std::popcount(block0)) < cap0_) {
      search(v + 1, block0 | bit, block1,
             cut + static_cast<std::size_t>(std::popcount(adj_[v] & block1)));
    }
    if (static_cast<std::size_t>(std::popcount(block1)) < cap1_) {
      search(v + 1, block0, block1 | bit,
             cut + static_cast<std::size_t>(std::popcount(adj_[v] & block0)));
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::size_t cap0_;
  std::size_t cap1_;
  Candidate best_;
};

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kExact: return "exact";
    case Method::kFormula: return "formula";
    case Method::kHeuristic: return "heuristic";
  }
  return "unknown";
}

CutReport rna_exact(const Graph& g, const ExactOptions& options) {
  const std::size_t n = g.order();
  const std::size_t limit = std::min(options.limit, kMaxExactVertices);
  if (n > limit) {
    fail(ErrorCode::kTooLarge,
         std::to_string(n) + " vertices exceeds the exact limit of " + std::to_string(limit));
  }
  const Candidate best = options.strategy == ExactStrategy::kBranchAndBound
                             ? BranchAndBound(g).run()
                             : exact_by_enumeration(g, options);
  return CutReport{Bipartition::from_block0_mask(n, best.block0), best.cut, Method::kExact, true};
}

std::size_t adhika(const Graph& g, const ExactOptions& options) {
  return g.size() - rna_exact(g, options).cut_size;
}

}  // namespace paritycut

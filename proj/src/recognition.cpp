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

#include "paritycut/recognition.hpp"

#include <algorithm>

#include "paritycut/balance.hpp"

namespace paritycut {

std::string Rejection::describe() const {
  if (kind == RejectionKind::kUnbalanced) return "Unbalanced";
  return "Imbalanced(" + std::to_string(difference) + ")";
}

RecognitionResult RecognitionResult::accept(ParityLabelling witness, Bipartition bipartition) {
  RecognitionResult r;
  r.witness_ = std::move(witness);
  r.bipartition_ = std::move(bipartition);
  return r;
}

RecognitionResult RecognitionResult::reject(Rejection reason,
                                            std::optional<Bipartition> bipartition) {
  RecognitionResult r;
  r.reason_ = reason;
  r.bipartition_ = std::move(bipartition);
  return r;
}

std::string RecognitionResult::describe() const {
  return reason_ ? "No: " + reason_->describe() : std::string("Yes");
}

RecognitionResult is_parity_signed(const SignedGraph& s) {
  auto harary = harary_bipartition(s);
  if (!harary) return RecognitionResult::reject({RejectionKind::kUnbalanced, 0}, std::nullopt);

  const std::size_t size0 = harary->block_size(0);
  const std::size_t size1 = harary->block_size(1);
  const std::size_t diff = size0 > size1 ? size0 - size1 : size1 - size0;
  if (diff > 1) {
    return RecognitionResult::reject({RejectionKind::kImbalanced, diff}, std::move(harary));
  }

  const std::uint8_t odd_block = size1 > size0 ? 1 : 0;
  std::vector<std::uint32_t> labels(s.order());
  std::uint32_t next_odd = 1;
  std::uint32_t next_even = 2;
  for (Vertex v = 0; v < s.order(); ++v) {
    if (harary->side(v) == odd_block) {
      labels[v] = next_odd;
      next_odd += 2;
    } else {
      labels[v] = next_even;
      next_even += 2;
    }
  }
  return RecognitionResult::accept(ParityLabelling(std::move(labels)), std::move(*harary));
}

ContractedCheck contracted_check(const SignedGraph& s) {
  const Graph& g = s.graph();
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "signed graph is not connected");
  if (!is_balanced(s)) fail(ErrorCode::kUnbalanced, "signed graph is not balanced");

  ContractedCheck out;
  constexpr auto kNone = static_cast<std::size_t>(-1);
  out.representative.assign(g.order(), kNone);

  const auto decomposition = sections(s);
  for (const auto& sec : decomposition.sections) {
    if (sec.sign != Sign::kPositive) continue;
    const std::size_t id = out.weight.size();
    out.weight.push_back(sec.order());
    for (Vertex v : sec.vertices) out.representative[v] = id;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.representative[v] == kNone) {
      out.representative[v] = out.weight.size();
      out.weight.push_back(1);
    }
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.sign(i) != Sign::kNegative) continue;
    auto a = out.representative[g.edge(i).u];
    auto b = out.representative[g.edge(i).v];
    if (a > b) std::swap(a, b);
    out.edges.emplace_back(a, b);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());

  const std::size_t k = out.weight.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [a, b] : out.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr std::uint8_t kUnset = 2;
  out.colour.assign(k, kUnset);
  out.colour[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x]) {
      if (out.colour[y] == kUnset) {
        out.colour[y] = out.colour[x] ^ 1U;
        stack.push_back(y);
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x) out.sums[out.colour[x]] += out.weight[x];
  const auto hi = std::max(out.sums[0], out.sums[1]);
  const auto lo = std::min(out.sums[0], out.sums[1]);
  out.parity_signed = hi - lo <= 1;
  return out;
}

ParityLabelling reverse_labelling(const ParityLabelling& f) {
  const auto n = static_cast<std::uint32_t>(f.size());
  std::vector<std::uint32_t> labels(f.size());
  for (Vertex v = 0; v < f.size(); ++v) labels[v] = n + 1 - f.label(v);
  return ParityLabelling(std::move(labels));
}

ParityLabelling permute_within_parity(const ParityLabelling& f,
                                      std::span<const std::uint32_t> odd_image,
                                      std::span<const std::uint32_t> even_image) {
  const std::size_t n = f.size();
  const std::size_t odd_count = (n + 1) / 2;
  const std::size_t even_count = n / 2;
  auto check = [n](std::span<const std::uint32_t> image, std::size_t count, std::uint32_t parity,
                   const char* what) {
    if (image.size() != count) {
      fail(ErrorCode::kInvalidPermutation, std::string(what) + " image must have " +
                                               std::to_string(count) + " entries");
    }
    std::vector<bool> seen(n + 1, false);
    for (auto l : image) {
      if (l == 0 || l > n || (l & 1U) != parity || seen[l]) {
        fail(ErrorCode::kInvalidPermutation,
             std::string(what) + " image is not a permutation of the " + what + " labels");
      }
      seen[l] = true;
    }
  };
  check(odd_image, odd_count, 1, "odd");
  check(even_image, even_count, 0, "even");

  std::vector<std::uint32_t> labels(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto l = f.label(v);
    labels[v] = (l & 1U) ? odd_image[(l - 1) / 2] : even_image[(l - 2) / 2];
  }
  return ParityLabelling(std::move(labels));
}

}  // namespace paritycut

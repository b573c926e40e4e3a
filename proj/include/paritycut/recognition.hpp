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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paritycut/core.hpp"

namespace paritycut {

enum class RejectionKind { kUnbalanced, kImbalanced };

struct Rejection {
  RejectionKind kind = RejectionKind::kUnbalanced;
  std::size_t difference = 0;  // ||V1| - |V2|| for kImbalanced, >= 2

  std::string describe() const;  // "Unbalanced" or "Imbalanced(d)"
};

class RecognitionResult {
 public:
  static RecognitionResult accept(ParityLabelling witness, Bipartition bipartition);
  static RecognitionResult reject(Rejection reason, std::optional<Bipartition> bipartition);

  bool is_parity_signed() const noexcept { return !reason_.has_value(); }
  explicit operator bool() const noexcept { return is_parity_signed(); }

  // Present iff is_parity_signed().
  const std::optional<ParityLabelling>& witness() const noexcept { return witness_; }
  // Harary bipartition; present unless the input is unbalanced.
  const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }
  const std::optional<Rejection>& reason() const noexcept { return reason_; }

  // "Yes" or "No: <reason>".
  std::string describe() const;

 private:
  std::optional<ParityLabelling> witness_;
  std::optional<Bipartition> bipartition_;
  std::optional<Rejection> reason_;
};

// Yes iff s is balanced and its Harary blocks differ in size by at most one.
// The witness gives odd labels 1, 3, 5, ... to the larger block (block 0 on a
// tie) and even labels to the other, each in ascending vertex order.
// Throws Disconnected.
RecognitionResult is_parity_signed(const SignedGraph& s);

// The section-contraction route to the same verdict: every positive section
// collapses to one vertex weighted by its order, untouched vertices weigh 1,
// and the all-negative remainder is two-coloured.
struct ContractedCheck {
  std::vector<std::size_t> representative;     // original vertex -> contracted vertex
  std::vector<std::size_t> weight;             // per contracted vertex
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // simple, a < b
  std::vector<std::uint8_t> colour;            // class of each contracted vertex
  std::array<std::size_t, 2> sums{};           // weight per class
  bool parity_signed = false;
};

// Throws Disconnected or Unbalanced.
ContractedCheck contracted_check(const SignedGraph& s);

// v -> n + 1 - f(v).
ParityLabelling reverse_labelling(const ParityLabelling& f);

// odd_image[i] is the new label for odd label 2i+1; even_image[i] the new
// label for even label 2i+2. Each must permute its parity class in {1..n}.
// Throws InvalidPermutation.
ParityLabelling permute_within_parity(const ParityLabelling& f,
                                      std::span<const std::uint32_t> odd_image,
                                      std::span<const std::uint32_t> even_image);

}  // namespace paritycut

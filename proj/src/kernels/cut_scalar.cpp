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

#include <bit>

#include "paritycut/kernels.hpp"

namespace paritycut::kernels::detail {

void cut_sizes_scalar(std::span<const std::uint64_t> adjacency,
                      std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const std::uint64_t s = masks[i];
    std::uint32_t cut = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      cut += static_cast<std::uint32_t>(std::popcount(adjacency[v] & ~s));
    }
    out[i] = cut;
  }
}

}  // namespace paritycut::kernels::detail

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

#include <arm_neon.h>

#include "paritycut/kernels.hpp"

namespace paritycut::kernels::detail {

void cut_sizes_neon(std::span<const std::uint64_t> adjacency,
                    std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  const std::size_t n = adjacency.size();
  const std::size_t count = masks.size();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t s = vld1q_u64(masks.data() + i);
    uint64x2_t total = vdupq_n_u64(0);
    uint8x16_t bytes = vdupq_n_u8(0);
    int pending = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const uint64x2_t bit = vdupq_n_u64(std::uint64_t{1} << v);
      const uint64x2_t member = vceqq_u64(vandq_u64(s, bit), bit);
      const uint64x2_t row = vdupq_n_u64(adjacency[v]);
      const uint64x2_t crossing = vandq_u64(vbicq_u64(row, s), member);
      bytes = vaddq_u8(bytes, vcntq_u8(vreinterpretq_u8_u64(crossing)));
      if (++pending == 31) {
        total = vaddq_u64(total, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
        bytes = vdupq_n_u8(0);
        pending = 0;
      }
    }
    total = vaddq_u64(total, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
    out[i] = static_cast<std::uint32_t>(vgetq_lane_u64(total, 0));
    out[i + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(total, 1));
  }
  if (i < count) cut_sizes_scalar(adjacency, masks.subspan(i), out.subspan(i));
}

}  // namespace paritycut::kernels::detail

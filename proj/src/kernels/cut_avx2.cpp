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

#include <immintrin.h>

#include "paritycut/kernels.hpp"

namespace paritycut::kernels::detail {

namespace {

// Per-byte popcount via the nibble lookup table.
inline __m256i popcount_bytes(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

}  // namespace

void cut_sizes_avx2(std::span<const std::uint64_t> adjacency,
                    std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  const std::size_t n = adjacency.size();
  const std::size_t count = masks.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    __m256i total = zero;
    __m256i bytes = zero;
    int pending = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
      const __m256i member = _mm256_cmpeq_epi64(_mm256_and_si256(s, bit), bit);
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
      const __m256i crossing = _mm256_and_si256(_mm256_andnot_si256(s, row), member);
      bytes = _mm256_add_epi8(bytes, popcount_bytes(crossing));
      // Byte lanes hold at most 8 per step; flush before they can wrap.
      if (++pending == 31) {
        total = _mm256_add_epi64(total, _mm256_sad_epu8(bytes, zero));
        bytes = zero;
        pending = 0;
      }
    }
    total = _mm256_add_epi64(total, _mm256_sad_epu8(bytes, zero));
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint32_t>(lanes[k]);
  }
  if (i < count) cut_sizes_scalar(adjacency, masks.subspan(i), out.subspan(i));
}

}  // namespace paritycut::kernels::detail

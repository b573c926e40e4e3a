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
#include <span>
#include <string_view>

// Batched cut counting over bitmask-encoded graphs with at most 64 vertices.
//
// adjacency[v] has bit w set iff {v, w} is an edge. For each subset mask S,
// the kernel stores the number of edges with exactly one endpoint in S, i.e.
// sum over v in S of popcount(adjacency[v] & ~S).
//
// The scalar kernel is the reference; vector kernels must produce identical
// output for every input.

namespace paritycut::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend backend) noexcept;

// Compiled in and supported by the running CPU.
bool available(Backend backend) noexcept;

// Widest available backend; resolved once.
Backend best_backend() noexcept;

// masks.size() must equal out.size(); adjacency.size() <= 64.
void cut_sizes(Backend backend, std::span<const std::uint64_t> adjacency,
               std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);

inline void cut_sizes(std::span<const std::uint64_t> adjacency,
                      std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  cut_sizes(best_backend(), adjacency, masks, out);
}

namespace detail {

void cut_sizes_scalar(std::span<const std::uint64_t> adjacency,
                      std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
#if defined(PARITYCUT_HAVE_AVX2)
void cut_sizes_avx2(std::span<const std::uint64_t> adjacency,
                    std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
#endif
#if defined(PARITYCUT_HAVE_NEON)
void cut_sizes_neon(std::span<const std::uint64_t> adjacency,
                    std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
#endif

}  // namespace detail

}  // namespace paritycut::kernels

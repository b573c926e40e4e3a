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

#include <string>

#include "paritycut/error.hpp"
#include "paritycut/kernels.hpp"

namespace paritycut::kernels {

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "unknown";
}

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(PARITYCUT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(PARITYCUT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() noexcept {
  static const Backend best = [] {
    if (available(Backend::kAvx2)) return Backend::kAvx2;
    if (available(Backend::kNeon)) return Backend::kNeon;
    return Backend::kScalar;
  }();
  return best;
}

void cut_sizes(Backend backend, std::span<const std::uint64_t> adjacency,
               std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  if (adjacency.size() > 64) fail(ErrorCode::kTooLarge, "cut kernels handle at most 64 vertices");
  if (masks.size() != out.size()) fail(ErrorCode::kInvalidParameters, "mask/output size mismatch");
  if (!available(backend)) {
    fail(ErrorCode::kInvalidParameters,
         "kernel backend " + std::string(to_string(backend)) + " is not available");
  }
  switch (backend) {
#if defined(PARITYCUT_HAVE_AVX2)
    case Backend::kAvx2:
      detail::cut_sizes_avx2(adjacency, masks, out);
      return;
#endif
#if defined(PARITYCUT_HAVE_NEON)
    case Backend::kNeon:
      detail::cut_sizes_neon(adjacency, masks, out);
      return;
#endif
    default:
      detail::cut_sizes_scalar(adjacency, masks, out);
      return;
  }
}

}  // namespace paritycut::kernels

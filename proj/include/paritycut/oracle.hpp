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
#include <iterator>
#include <vector>

#include "paritycut/core.hpp"

// Brute-force ground truth. A signature depends only on which vertices get
// odd labels, so the n! labellings collapse to the C(n, ceil(n/2)) choices of
// odd vertex set. Nothing here shares code with the recognition or rna
// solvers.

namespace paritycut::oracle {

inline constexpr std::size_t kMaxOracleVertices = 20;

// The vertices receiving odd labels, sorted; size ceil(n/2).
struct ParityPattern {
  std::vector<Vertex> odd_set;

  friend bool operator==(const ParityPattern&, const ParityPattern&) = default;
};

// Every size-ceil(n/2) subset of {0..n-1} exactly once, in lexicographic
// order. Lazy; usable in a range-for.
class PatternRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ParityPattern;
    using difference_type = std::ptrdiff_t;
    using pointer = const ParityPattern*;
    using reference = const ParityPattern&;

    iterator() = default;
    iterator(std::size_t n, bool done);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    std::size_t n_ = 0;
    bool done_ = true;
    ParityPattern current_;
  };

  explicit PatternRange(std::size_t n);

  iterator begin() const { return iterator(n_, false); }
  iterator end() const { return iterator(n_, true); }

 private:
  std::size_t n_;
};

PatternRange enumerate_patterns(std::size_t n);

// The pattern a labelling induces.
ParityPattern pattern_of(const ParityLabelling& f);

// Signs induced on g by a pattern: negative iff exactly one endpoint is odd.
std::vector<Sign> pattern_signs(const Graph& g, const ParityPattern& p);

// Any pattern reproducing the signature exactly. Connectivity not required.
// Throws TooLarge above 20 vertices.
bool oracle_is_parity_signed(const SignedGraph& s);

// Minimum negative-edge count over all patterns. Throws TooLarge.
std::size_t oracle_rna(const Graph& g);

// Maximum positive-edge count over all patterns. Throws TooLarge.
std::size_t oracle_adhika(const Graph& g);

}  // namespace paritycut::oracle

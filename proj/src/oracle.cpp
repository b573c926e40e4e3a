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

#include "paritycut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace paritycut::oracle {

namespace {

void guard(std::size_t n) {
  if (n > kMaxOracleVertices) {
    fail(ErrorCode::kTooLarge, "oracle handles at most " + std::to_string(kMaxOracleVertices) +
                                   " vertices, got " + std::to_string(n));
  }
}

// Calls visit(odd) for every pattern with odd[v] = 1 for odd-labelled v;
// stops early when visit returns true.
template <class Visit>
bool any_pattern(std::size_t n, Visit visit) {
  std::vector<char> odd(n, 0);
  for (const auto& p : enumerate_patterns(n)) {
    std::fill(odd.begin(), odd.end(), 0);
    for (Vertex v : p.odd_set) odd[v] = 1;
    if (visit(odd)) return true;
  }
  return false;
}

std::size_t negatives(const Graph& g, const std::vector<char>& odd) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) count += odd[e.u] != odd[e.v];
  return count;
}

}  // namespace

PatternRange::iterator::iterator(std::size_t n, bool done) : n_(n), done_(done) {
  if (!done_) {
    current_.odd_set.resize((n_ + 1) / 2);
    std::iota(current_.odd_set.begin(), current_.odd_set.end(), Vertex{0});
  }
}

PatternRange::iterator& PatternRange::iterator::operator++() {
  auto& s = current_.odd_set;
  const std::size_t k = s.size();
  // Rightmost position that can still advance.
  std::size_t i = k;
  while (i > 0 && s[i - 1] == n_ - k + (i - 1)) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  ++s[i - 1];
  for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  return *this;
}

PatternRange::PatternRange(std::size_t n) : n_(n) {
  if (n == 0) fail(ErrorCode::kEmptyGraph, "no patterns for an empty vertex set");
}

PatternRange enumerate_patterns(std::size_t n) { return PatternRange(n); }

ParityPattern pattern_of(const ParityLabelling& f) {
  ParityPattern p;
  for (Vertex v = 0; v < f.size(); ++v) {
    if (f.is_odd(v)) p.odd_set.push_back(v);
  }
  return p;
}

std::vector<Sign> pattern_signs(const Graph& g, const ParityPattern& p) {
  std::vector<char> odd(g.order(), 0);
  for (Vertex v : p.odd_set) odd[v] = 1;
  std::vector<Sign> out;
  out.reserve(g.size());
  for (const auto& e : g.edges()) {
    out.push_back(odd[e.u] == odd[e.v] ? Sign::kPositive : Sign::kNegative);
  }
  return out;
}

bool oracle_is_parity_signed(const SignedGraph& s) {
  guard(s.order());
  const Graph& g = s.graph();
  return any_pattern(g.order(), [&](const std::vector<char>& odd) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& e = g.edge(i);
      const bool negative = odd[e.u] != odd[e.v];
      if (negative != (s.sign(i) == Sign::kNegative)) return false;
    }
    return true;
  });
}

std::size_t oracle_rna(const Graph& g) {
  guard(g.order());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  any_pattern(g.order(), [&](const std::vector<char>& odd) {
    best = std::min(best, negatives(g, odd));
    return false;
  });
  return best;
}

std::size_t oracle_adhika(const Graph& g) {
  guard(g.order());
  std::size_t best = 0;
  any_pattern(g.order(), [&](const std::vector<char>& odd) {
    best = std::max(best, g.size() - negatives(g, odd));
    return false;
  });
  return best;
}

}  // namespace paritycut::oracle

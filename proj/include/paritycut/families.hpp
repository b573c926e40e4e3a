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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "paritycut/core.hpp"

namespace paritycut {

namespace family {

// Vertices 0..n-1 in order; signs[i] is the sign of edge {i, i+1}. An empty
// sign vector means all negative.
struct Path {
  std::size_t n = 0;
  std::vector<Sign> signs;
};

// Vertices 0..n-1 in order; signs[i] is the sign of edge {i, (i+1) mod n}.
struct Cycle {
  std::size_t n = 0;
  std::vector<Sign> signs;
};

// K_{1, positive + negative}: centre 0, positive leaves 1..positive, then the
// negative leaves.
struct Star {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// B+(m, n): positive edge uv (u = 0, v = 1), m positive pendants at u, then n
// negative pendants at v.
struct BistarPlus {
  std::size_t m = 0;
  std::size_t n = 0;
};

// B*(m, n): all-negative bistar, m pendants at u = 0 and n at v = 1.
struct BistarAllNeg {
  std::size_t m = 0;
  std::size_t n = 0;
};

// W_n has n vertices: hub 0 joined to the rim cycle 1..n-1. signs, when
// given, cover the n-1 spokes {0, i} followed by the n-1 rim edges
// {i, i+1}, {n-1, 1}. Empty means all negative.
struct Wheel {
  std::size_t n = 0;
  std::vector<Sign> signs;
};

// All-negative K_{m,n}: parts 0..m-1 and m..m+n-1.
struct CompleteBipartiteAllNeg {
  std::size_t m = 0;
  std::size_t n = 0;
};

// All-negative P_n x K_2: rows 0..n-1 and n..2n-1, rung {i, n+i}.
struct Ladder {
  std::size_t n = 0;
};

// base with t pendant vertices attached to each base vertex by negative
// edges. Pendants of base vertex v are numbered base.order() + v*t + j.
struct Corona {
  std::shared_ptr<const SignedGraph> base;
  std::size_t t = 0;
};

}  // namespace family

using FamilyDescriptor =
    std::variant<family::Path, family::Cycle, family::Star, family::BistarPlus,
                 family::BistarAllNeg, family::Wheel, family::CompleteBipartiteAllNeg,
                 family::Ladder, family::Corona>;

std::string describe(const FamilyDescriptor& d);

// Throws InvalidParameters.
SignedGraph generate(const FamilyDescriptor& d);

// Closed-form verdicts. Each one agrees with is_parity_signed on the
// corresponding generated graph.

// Throws NotACycle.
bool cycle_is_parity_signed(const SignedGraph& s);
// Throws NotAPath.
bool path_is_parity_signed(const SignedGraph& s);

// Star with m positive and n negative edges: parity signed iff n - m is 0, 1
// or 2.
bool star_is_parity_signed(std::size_t m, std::size_t n);
// n = m+1 or m+3 when m+n is odd, n = m+2 when m+n is even.
bool bistar_plus_is_parity_signed(std::size_t m, std::size_t n);
// |m - n| <= 1.
bool bistar_allneg_is_parity_signed(std::size_t m, std::size_t n);

// Bipartite with parts differing in size by at most one.
// Throws NotAllNegative or Disconnected.
bool negative_homogeneous_is_parity_signed(const SignedGraph& s);

// A shape recognised by classify() and its closed-form verdict.
struct ShapeVerdict {
  std::string shape;  // e.g. "cycle", "star(m=2,n=2)"
  bool parity_signed = false;
};

// Every closed form that applies to s, in a fixed order: path, cycle, star,
// bistar+, bistar*, negative homogeneous.
std::vector<ShapeVerdict> classify(const SignedGraph& s);

}  // namespace paritycut

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

#include <doctest.h>

#include <cstdlib>

#include "paritycut/oracle.hpp"
#include "paritycut/recognition.hpp"
#include "paritycut/rna.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace paritycut;
using namespace paritycut::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kSyntaxError;
}

Graph star_graph(std::size_t leaves) { return generate(family::Star{0, leaves}).graph(); }
Graph wheel_graph(std::size_t n) { return generate(family::Wheel{n, {}}).graph(); }

bool well_formed(const CutReport& r, const Graph& g) {
  const std::size_t n = g.order();
  if (r.bipartition.block_size(0) != n / 2) return false;
  if (n % 2 == 0 && n > 0 && r.bipartition.side(0) != 0) return false;
  return r.bipartition.cut_size(g) == r.cut_size;
}

}  // namespace

TEST_CASE("rna_exact examples") {
  CHECK(rna_exact(star_graph(4)).cut_size == 2);
  CHECK(rna_exact(path_graph(5)).cut_size == 1);
  CHECK(rna_exact(cycle_graph(6)).cut_size == 2);
  CHECK(rna_exact(wheel_graph(5)).cut_size == 4);
  const auto r = rna_exact(cycle_graph(6));
  CHECK(r.method == Method::kExact);
  CHECK(r.optimal);
  CHECK(well_formed(r, cycle_graph(6)));
}

TEST_CASE("rna_exact on tiny graphs") {
  CHECK(rna_exact(Graph(1, {})).cut_size == 0);
  CHECK(rna_exact(Graph(2, {{0, 1}})).cut_size == 1);
  CHECK(rna_exact(Graph(4, {})).cut_size == 0);
}

TEST_CASE("adhika examples") {
  CHECK(adhika(path_graph(5)) == 3);
  CHECK(adhika(cycle_graph(4)) == 2);
  CHECK(adhika(path_graph(3)) == 1);
}

TEST_CASE("rna_formula examples and domain") {
  CHECK(rna_formula(family::Star{3, 5}) == 4);
  CHECK(rna_formula(family::Star{0, 7}) == 4);
  CHECK(rna_formula(family::Wheel{6, {}}) == 5);
  CHECK(rna_formula(family::Path{2, {}}) == 1);
  CHECK(rna_formula(family::Cycle{9, {}}) == 2);
  CHECK(code_of([] { rna_formula(family::Ladder{3}); }) == ErrorCode::kNoKnownFormula);
  CHECK(code_of([] { rna_formula(family::Path{1, {}}); }) == ErrorCode::kNoKnownFormula);
}

TEST_CASE("property: rna formulas agree with the exact solver") {
  for (std::size_t leaves = 1; leaves <= 16; ++leaves) {
    CHECK(rna_formula(family::Star{0, leaves}) == rna_exact(star_graph(leaves)).cut_size);
  }
  for (std::size_t n = 2; n <= 14; ++n) {
    CHECK(rna_formula(family::Path{n, {}}) == rna_exact(path_graph(n)).cut_size);
  }
  for (std::size_t n = 3; n <= 14; ++n) {
    CHECK(rna_formula(family::Cycle{n, {}}) == rna_exact(cycle_graph(n)).cut_size);
  }
  for (std::size_t n = 4; n <= 16; ++n) {
    CHECK(rna_formula(family::Wheel{n, {}}) == rna_exact(wheel_graph(n)).cut_size);
  }
}

TEST_CASE("property: star with 2k edges has rna k") {
  for (std::size_t k = 1; k <= 8; ++k) CHECK(rna_exact(star_graph(2 * k)).cut_size == k);
}

TEST_CASE("bridges and rna_is_one") {
  CHECK(rna_is_one(path_graph(4)));
  CHECK_FALSE(rna_is_one(cycle_graph(4)));
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(bridges(two_triangles) == std::vector<Edge>{{2, 3}});
  CHECK(rna_is_one(two_triangles));
  CHECK_FALSE(rna_is_one(star_graph(4)));
  CHECK(code_of([] { rna_is_one(Graph(3, {{0, 1}})); }) == ErrorCode::kDisconnected);
}

TEST_CASE("property: rna_is_one matches the exact solver") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform(rng, 2, 12);
    const auto g = random_connected_graph(n, trial % 3 == 0 ? 0.0 : 0.2, rng);
    REQUIRE(rna_is_one(g) == (rna_exact(g).cut_size == 1));
  }
}

TEST_CASE("rna_heuristic examples") {
  const auto star = rna_heuristic(star_graph(16));
  CHECK(star.cut_size == 8);
  CHECK(star.method == Method::kHeuristic);
  CHECK_FALSE(star.optimal);
  CHECK(rna_heuristic(path_graph(10)).cut_size == 1);

  Rng rng(7);
  const auto g = random_connected_graph(40, 0.1, rng);
  const auto r = rna_heuristic(g);
  CHECK(well_formed(r, g));
  CHECK(rna_heuristic(g).bipartition == r.bipartition);
  CHECK(rna_heuristic(Graph(1, {})).cut_size == 0);
}

TEST_CASE("property: heuristic is sound and well formed") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform(rng, 2, 16);
    const auto g = random_connected_graph(n, 0.25, rng);
    const auto h = rna_heuristic(g, {.seed = static_cast<std::uint64_t>(trial), .iterations = 8});
    REQUIRE(well_formed(h, g));
    REQUIRE(h.cut_size >= rna_exact(g).cut_size);
  }
}

TEST_CASE("cordiality") {
  CHECK_FALSE(is_cordial(figure1()));
  CHECK(is_cordial(signed_path({N})));
  CHECK(is_cordial(signed_path({P, N})));
  CHECK(code_of([] { is_cordial(figure2()); }) == ErrorCode::kNotParitySigned);

  CHECK(is_absolutely_cordial(path_graph(3)));
  CHECK(is_absolutely_cordial(cycle_graph(4)));
  CHECK_FALSE(is_absolutely_cordial(cycle_graph(6)));
}

TEST_CASE("parity_complement") {
  const auto s = figure3_left();
  const ParityLabelling mu({1, 2, 3, 4});
  const auto c = parity_complement(s, mu);
  CHECK(c.order() == 4);
  CHECK(c.size() == 3);
  CHECK(c.sign(0, 2) == P);
  CHECK(c.sign(0, 3) == N);
  CHECK(c.sign(1, 2) == N);

  const auto k4 = all_sign(complete_graph(4), N);
  CHECK(code_of([&] { parity_complement(k4, ParityLabelling({1, 2, 3, 4})); }) ==
        ErrorCode::kLabellingNotWitness);
  const auto k4_induced = induced_signature(complete_graph(4), ParityLabelling({1, 2, 3, 4}));
  CHECK(parity_complement(k4_induced, ParityLabelling({1, 2, 3, 4})).size() == 0);
  CHECK(parity_complement(signed_path({N}), ParityLabelling({1, 2})).size() == 0);
  CHECK(code_of([] { parity_complement(figure3_left(), ParityLabelling({1, 3, 2, 4})); }) ==
        ErrorCode::kLabellingNotWitness);
}

TEST_CASE("property: parity complement of a parity signed graph is parity signed") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 2, 10);
    const auto g = random_connected_graph(n, 0.3, rng);
    const auto mu = random_labelling(n, rng);
    const auto s = induced_signature(g, mu);
    const auto c = parity_complement(s, mu);
    // The complement may be disconnected; mu itself is a witness either way.
    REQUIRE(induced_signature(c.graph(), mu) == c);
    REQUIRE(oracle::oracle_is_parity_signed(c));
    if (c.size() > 0 && is_connected(c.graph())) REQUIRE(is_parity_signed(c).is_parity_signed());
  }
}

TEST_CASE("exact strategies agree with brute force and the oracle, including tie-break") {
  Rng rng(31);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = uniform(rng, 1, 14);
    const auto g = random_graph(n, trial % 2 == 0 ? 0.2 : 0.5, rng);
    const auto brute = brute_force_min_bisection(g);
    const auto e = rna_exact(g, {.strategy = ExactStrategy::kEnumerate});
    const auto b = rna_exact(g, {.strategy = ExactStrategy::kBranchAndBound});
    REQUIRE(e.cut_size == brute.cut);
    REQUIRE(b.cut_size == brute.cut);
    REQUIRE(e.bipartition.block(0) == brute.block0);
    REQUIRE(b.bipartition == e.bipartition);
    REQUIRE(oracle::oracle_rna(g) == brute.cut);
    REQUIRE(adhika(g) == oracle::oracle_adhika(g));
  }
}

TEST_CASE("exact solver is deterministic across threads and backends") {
  Rng rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = uniform(rng, 14, 22);
    const auto g = random_connected_graph(n, 0.25, rng);
    const auto base = rna_exact(g, {.threads = 1, .backend = kernels::Backend::kScalar});
    for (unsigned t : {2U, 3U, 8U}) {
      for (auto backend : {kernels::Backend::kScalar, kernels::Backend::kAvx2, kernels::Backend::kNeon}) {
        if (!kernels::available(backend)) continue;
        const auto r = rna_exact(g, {.threads = t, .backend = backend});
        REQUIRE(r.cut_size == base.cut_size);
        REQUIRE(r.bipartition == base.bipartition);
      }
    }
  }
}

TEST_CASE("exact solver refuses graphs above the limit") {
  CHECK(code_of([] { rna_exact(path_graph(30)); }) == ErrorCode::kTooLarge);
  CHECK(code_of([] { rna_exact(path_graph(10), {.limit = 8}); }) == ErrorCode::kTooLarge);
  CHECK(code_of([] { rna_exact(path_graph(65), {.limit = 100}); }) == ErrorCode::kTooLarge);
  CHECK(rna_exact(path_graph(30), {.limit = 30, .strategy = ExactStrategy::kBranchAndBound}).cut_size == 1);
}

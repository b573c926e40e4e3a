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

#include <algorithm>

#include "paritycut/families.hpp"
#include "paritycut/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace paritycut;
using namespace paritycut::testing;
using oracle::ParityPattern;

namespace {

std::vector<ParityPattern> collect(std::size_t n) {
  std::vector<ParityPattern> out;
  for (const auto& p : oracle::enumerate_patterns(n)) out.push_back(p);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_patterns small cases") {
  CHECK(collect(2) == std::vector<ParityPattern>{{{0}}, {{1}}});
  CHECK(collect(3) == std::vector<ParityPattern>{{{0, 1}}, {{0, 2}}, {{1, 2}}});
  CHECK(collect(5).size() == 10);
  CHECK(collect(1) == std::vector<ParityPattern>{{{0}}});
}

TEST_CASE("property: patterns are distinct, lexicographic and complete") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto all = collect(n);
    CHECK(all.size() == binomial(n, (n + 1) / 2));
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(all[i].odd_set.size() == (n + 1) / 2);
      REQUIRE(std::is_sorted(all[i].odd_set.begin(), all[i].odd_set.end()));
      if (i > 0) REQUIRE(all[i - 1].odd_set < all[i].odd_set);
    }
  }
}

TEST_CASE("property: pattern_of canonicalises labellings") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 1, 12);
    const auto f = random_labelling(n, rng);
    const auto p = oracle::pattern_of(f);
    REQUIRE(p.odd_set.size() == (n + 1) / 2);
    for (Vertex v = 0; v < n; ++v) {
      const bool in = std::binary_search(p.odd_set.begin(), p.odd_set.end(), v);
      REQUIRE(in == f.is_odd(v));
    }
    const auto g = random_graph(n, 0.4, rng);
    REQUIRE(std::ranges::equal(oracle::pattern_signs(g, p), induced_signature(g, f).signs()));
  }
}

TEST_CASE("oracle verdict examples") {
  CHECK(oracle::oracle_is_parity_signed(figure1()));
  CHECK_FALSE(oracle::oracle_is_parity_signed(figure2()));
  CHECK_FALSE(oracle::oracle_is_parity_signed(all_sign(path_graph(3), P)));
  CHECK(oracle::oracle_is_parity_signed(build_signed_graph(3, {})));
}

TEST_CASE("oracle rna and adhika examples") {
  CHECK(oracle::oracle_rna(generate(family::Star{0, 4}).graph()) == 2);
  CHECK(oracle::oracle_rna(cycle_graph(6)) == 2);
  CHECK(oracle::oracle_rna(generate(family::Wheel{6, {}}).graph()) == 5);
  CHECK(oracle::oracle_adhika(path_graph(5)) == 3);
}

TEST_CASE("oracle refuses graphs above 20 vertices") {
  CHECK_NOTHROW(oracle::oracle_rna(path_graph(20)));
  try {
    oracle::oracle_rna(path_graph(21));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  CHECK_THROWS_AS(oracle::oracle_is_parity_signed(all_sign(path_graph(21), N)), Error);
}

TEST_CASE("property: oracle agrees with the n! bijection search") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = random_signed_connected(uniform(rng, 1, 7), rng);
    REQUIRE(oracle::oracle_is_parity_signed(s) == bijection_oracle(s));
  }
}

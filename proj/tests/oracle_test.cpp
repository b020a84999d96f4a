// Copyright 2026 The colldist Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "colldist/errors.hpp"
#include "colldist/oracle.hpp"
#include "test_support.hpp"

using colldist::Coupling;
using colldist::Matching;
using colldist::MonotoneMatching;
using colldist::brute_min;
using colldist::enumerate_couplings;
using colldist::enumerate_matchings;
using colldist::enumerate_monotone_matchings;
using colldist::validate_coupling;

namespace {

// Canonical form for uniqueness checks: pair lists sorted by first index.
std::vector<std::pair<std::size_t, std::size_t>> canonical(
    std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

TEST_CASE("matching enumeration counts match the closed form") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto matchings = enumerate_matchings(n, m);
      CHECK(matchings.size() == testsupport::matching_count(n, m));
    }
  }
}

TEST_CASE("matchings are unique and well formed") {
  const auto matchings = enumerate_matchings(3, 4);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (const Matching& m : matchings) {
    seen.insert(canonical(m.pairs));
    std::set<std::size_t> xs, ys;
    for (const auto& [a, b] : m.pairs) {
      CHECK(a < 3);
      CHECK(b < 4);
      CHECK(xs.insert(a).second);
      CHECK(ys.insert(b).second);
    }
  }
  CHECK(seen.size() == matchings.size());
  // The empty matching is always present.
  CHECK(seen.count({}) == 1);
}

TEST_CASE("monotone enumeration counts match the closed form") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto monotone = enumerate_monotone_matchings(n, m);
      CHECK(monotone.size() == testsupport::monotone_matching_count(n, m));
    }
  }
}

TEST_CASE("monotone matchings preserve order in both coordinates") {
  for (const MonotoneMatching& m : enumerate_monotone_matchings(4, 3)) {
    for (std::size_t r = 1; r < m.pairs.size(); ++r) {
      CHECK(m.pairs[r - 1].first < m.pairs[r].first);
      CHECK(m.pairs[r - 1].second < m.pairs[r].second);
    }
  }
}

TEST_CASE("coupling enumeration counts match the lattice-path recurrence") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const auto couplings = enumerate_couplings(n, m);
      CHECK(couplings.size() == testsupport::coupling_count(n, m));
    }
  }
  // Two singleton sequences admit exactly one coupling.
  CHECK(enumerate_couplings(1, 1).size() == 1);
}

TEST_CASE("enumerated couplings validate and are unique") {
  const auto couplings = enumerate_couplings(3, 4);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (const Coupling& c : couplings) {
    CHECK_NOTHROW(validate_coupling(c, 3, 4));
    seen.insert(c.steps);
  }
  CHECK(seen.size() == couplings.size());
}

TEST_CASE("enumerations enforce their scale guards") {
  CHECK_THROWS_AS(enumerate_matchings(5, 5), colldist::ScaleLimitError);
  CHECK_THROWS_AS(enumerate_monotone_matchings(7, 3), colldist::ScaleLimitError);
  CHECK_THROWS_AS(enumerate_couplings(7, 6), colldist::ScaleLimitError);
  CHECK_NOTHROW(enumerate_matchings(4, 5));
  CHECK_NOTHROW(enumerate_couplings(6, 6));
}

TEST_CASE("couplings need non-empty sequences") {
  CHECK_THROWS_AS(enumerate_couplings(0, 3), colldist::EmptyInputError);
  CHECK_THROWS_AS(enumerate_couplings(3, 0), colldist::EmptyInputError);
}

TEST_CASE("brute_min takes the exact minimum") {
  const auto matchings = enumerate_matchings(2, 2);
  // Cost favors larger matchings: 10 minus the matching size.
  const double best = brute_min(matchings, [](const Matching& m) {
    return 10.0 - static_cast<double>(m.size());
  });
  CHECK(best == 8.0);
  CHECK_THROWS_AS(brute_min(std::vector<Matching>{}, [](const Matching&) { return 0.0; }),
                  colldist::EmptyInputError);
}

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

#include "colldist/oracle.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace colldist {

namespace {

constexpr std::size_t kMatchingGuard = 20;  // max n_x * n_y
constexpr std::size_t kCouplingGuard = 12;  // max n + m

void extend_matchings(std::size_t slot, std::size_t n_x, std::size_t n_y,
                      std::vector<bool>& y_used, Matching& partial,
                      std::vector<Matching>& out) {
  if (slot == n_x) {
    out.push_back(partial);
    return;
  }
  // x-slot `slot` stays unmatched.
  extend_matchings(slot + 1, n_x, n_y, y_used, partial, out);
  // Or pairs with each still-free y-slot.
  for (std::size_t b = 0; b < n_y; ++b) {
    if (y_used[b]) continue;
    y_used[b] = true;
    partial.pairs.push_back({slot, b});
    extend_matchings(slot + 1, n_x, n_y, y_used, partial, out);
    partial.pairs.pop_back();
    y_used[b] = false;
  }
}

void extend_couplings(std::size_t n, std::size_t m, Coupling& partial,
                      std::vector<Coupling>& out) {
  const auto [i, j] = partial.steps.back();
  if (i == n - 1 && j == m - 1) {
    out.push_back(partial);
    return;
  }
  const bool can_i = i + 1 < n;
  const bool can_j = j + 1 < m;
  if (can_i) {
    partial.steps.push_back({i + 1, j});
    extend_couplings(n, m, partial, out);
    partial.steps.pop_back();
  }
  if (can_j) {
    partial.steps.push_back({i, j + 1});
    extend_couplings(n, m, partial, out);
    partial.steps.pop_back();
  }
  if (can_i && can_j) {
    partial.steps.push_back({i + 1, j + 1});
    extend_couplings(n, m, partial, out);
    partial.steps.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(std::size_t n_x, std::size_t n_y) {
  if (n_x * n_y > kMatchingGuard)
    throw ScaleLimitError("matching enumeration exceeds its size guard");
  std::vector<Matching> out;
  std::vector<bool> y_used(n_y, false);
  Matching partial;
  extend_matchings(0, n_x, n_y, y_used, partial, out);
  return out;
}

std::vector<MonotoneMatching> enumerate_monotone_matchings(std::size_t n_x,
                                                           std::size_t n_y) {
  std::vector<MonotoneMatching> out;
  for (const Matching& m : enumerate_matchings(n_x, n_y)) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs = m.pairs;
    std::sort(pairs.begin(), pairs.end());
    bool monotone = true;
    for (std::size_t r = 1; r < pairs.size(); ++r) {
      if (!(pairs[r - 1].first < pairs[r].first && pairs[r - 1].second < pairs[r].second)) {
        monotone = false;
        break;
      }
    }
    if (monotone) out.push_back(MonotoneMatching{std::move(pairs)});
  }
  return out;
}

std::vector<Coupling> enumerate_couplings(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0)
    throw EmptyInputError("couplings are undefined for empty sequences");
  if (n + m > kCouplingGuard)
    throw ScaleLimitError("coupling enumeration exceeds its size guard");
  std::vector<Coupling> out;
  Coupling partial;
  partial.steps.push_back({0, 0});
  extend_couplings(n, m, partial, out);
  return out;
}

}  // namespace colldist

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

#include "colldist/assignment.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "colldist/errors.hpp"

namespace colldist {

AssignmentResult solve_assignment(const CostMatrix& cost) {
  if (!cost.square())
    throw InvalidInputError("assignment cost matrix must be square");
  for (double entry : cost.data()) {
    if (std::isnan(entry) || !std::isfinite(entry))
      throw InvalidInputError("assignment cost matrix entries must be finite");
    if (entry < 0.0)
      throw InvalidInputError("assignment cost matrix entries must be non-negative");
  }

  const std::size_t n = cost.rows();
  AssignmentResult result;
  if (n == 0) return result;

  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Shortest augmenting paths with dual potentials, one augmentation per
  // row.  Arrays are 1-based; column 0 is the virtual start column that the
  // current row enters through.  p[j] is the row assigned to column j.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0);
  std::vector<std::size_t> way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_reduced(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          way[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    // Unwind the augmenting path recorded in `way`.
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.assignment.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.assignment[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i)
    result.total_cost += cost(i, result.assignment[i]);
  return result;
}

}  // namespace colldist

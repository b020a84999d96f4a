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

#ifndef COLLDIST_ASSIGNMENT_HPP
#define COLLDIST_ASSIGNMENT_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "colldist/ground.hpp"
#include "colldist/matrix.hpp"
#include "colldist/multiset.hpp"

namespace colldist {

// A minimum-cost perfect assignment on a square cost matrix.
// assignment[i] is the column matched to row i; total_cost is the exact sum
// of the chosen entries, re-accumulated row by row after solving.
struct AssignmentResult {
  std::vector<std::size_t> assignment;
  double total_cost = 0.0;
};

// Solves the square assignment problem by shortest augmenting paths with
// dual potentials, O(n^3) overall.  Deterministic: equal-cost optima resolve
// the same way for the same input.  Rejects non-square matrices and NaN,
// infinite or negative entries.
AssignmentResult solve_assignment(const CostMatrix& cost);

// A square assignment instance encoding a matching problem between two
// collections, together with the bookkeeping needed to read a matching back
// out of a row assignment.  n_x and n_y are the collection sizes as given by
// the caller; `swapped` records that the two collections traded places so
// that rows come from the smaller one.
struct MatchingProblem {
  CostMatrix cost;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  bool swapped = false;
  bool all_matchings = false;
};

// Builds the instance whose optima are exactly the complete matchings: every
// element of the smaller collection must be paired.  With |X| <= |Y| (the
// builder swaps roles if needed) the matrix is |Y| x |Y|; rows past |X| are
// placeholder rows whose entry in column j is the penalty for leaving y_j
// unmatched.
template <typename T>
MatchingProblem build_cost_matrix_complete(
    const Multiset<T>& x, const Multiset<T>& y, const GroundMetric<T>& ground,
    const std::function<double(const T&)>& penalty) {
  if (!penalty) throw ConfigError("cost matrix construction requires a penalty function");

  const Multiset<T>* small = &x;
  const Multiset<T>* large = &y;
  bool swapped = false;
  if (small->size() > large->size()) {
    std::swap(small, large);
    swapped = true;
  }
  const std::vector<T> rows = small->expanded();
  const std::vector<T> cols = large->expanded();

  const std::size_t n = cols.size();
  MatchingProblem problem;
  problem.cost = CostMatrix(n, n);
  problem.n_x = static_cast<std::size_t>(x.size());
  problem.n_y = static_cast<std::size_t>(y.size());
  problem.swapped = swapped;

  for (std::size_t j = 0; j < n; ++j) {
    const double unmatched = penalty(cols[j]);
    for (std::size_t i = 0; i < n; ++i)
      problem.cost(i, j) = i < rows.size() ? ground(rows[i], cols[j]) : unmatched;
  }
  return problem;
}

// Builds the instance whose optima range over all matchings, complete or
// not.  The matrix is (|X|+|Y|) square: the top-left block holds pairing
// costs, the off-diagonal blocks hold the penalties for leaving an element
// unmatched, and the bottom-right block is zero so surplus placeholders pair
// up for free.
template <typename T>
MatchingProblem build_cost_matrix_all(
    const Multiset<T>& x, const Multiset<T>& y, const GroundMetric<T>& ground,
    const std::function<double(const T&)>& penalty) {
  if (!penalty) throw ConfigError("cost matrix construction requires a penalty function");

  const std::vector<T> xs = x.expanded();
  const std::vector<T> ys = y.expanded();
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  const std::size_t n = nx + ny;

  MatchingProblem problem;
  problem.cost = CostMatrix(n, n);
  problem.n_x = nx;
  problem.n_y = ny;
  problem.all_matchings = true;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double& entry = problem.cost(i, j);
      if (i < nx && j < ny)
        entry = ground(xs[i], ys[j]);
      else if (i < nx)
        entry = penalty(xs[i]);
      else if (j < ny)
        entry = penalty(ys[j]);
      else
        entry = 0.0;
    }
  }
  return problem;
}

}  // namespace colldist

#endif  // COLLDIST_ASSIGNMENT_HPP

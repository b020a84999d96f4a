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

#include "colldist/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "colldist/errors.hpp"

namespace colldist {

namespace {

// Absolute tolerance on the difference between total supply and total demand.
constexpr double kMarginalTol = 1e-9;

// Base step of the lexicographic mass perturbation: source i gains
// kPerturb * (i + 1), the last target absorbs the total.  Large enough to
// dominate double rounding on unit-scale masses, small enough to vanish
// against kMarginalTol when the flows are re-derived.
constexpr double kPerturb = 1e-12;

// A reduced cost must clear this margin to count as an improving pivot.
constexpr double kPivotTol = 1e-11;

struct BasicCell {
  std::size_t i;
  std::size_t j;
  double flow;
};

// Spanning-tree view of a basis: node r in [0, rows) is source r, node
// rows + c is target c.
struct TreeIndex {
  std::vector<std::vector<std::size_t>> edges_at;  // node -> basis edge ids

  TreeIndex(const std::vector<BasicCell>& basis, std::size_t rows, std::size_t cols)
      : edges_at(rows + cols) {
    for (std::size_t e = 0; e < basis.size(); ++e) {
      edges_at[basis[e].i].push_back(e);
      edges_at[rows + basis[e].j].push_back(e);
    }
  }
};

// Solves u_i + v_j = cost(i, j) over the basis tree, anchoring u_0 = 0.
void solve_duals(const std::vector<BasicCell>& basis, const Matrix& cost,
                 std::size_t rows, std::size_t cols, std::vector<double>& u,
                 std::vector<double>& v) {
  const TreeIndex tree(basis, rows, cols);
  std::vector<bool> known(rows + cols, false);
  u.assign(rows, 0.0);
  v.assign(cols, 0.0);
  std::deque<std::size_t> frontier;
  known[0] = true;
  frontier.push_back(0);
  while (!frontier.empty()) {
    const std::size_t node = frontier.front();
    frontier.pop_front();
    for (std::size_t e : tree.edges_at[node]) {
      const BasicCell& cell = basis[e];
      const std::size_t other = node < rows ? rows + cell.j : cell.i;
      if (known[other]) continue;
      if (other < rows)
        u[other] = cost(cell.i, cell.j) - v[cell.j];
      else
        v[other - rows] = cost(cell.i, cell.j) - u[cell.i];
      known[other] = true;
      frontier.push_back(other);
    }
  }
  for (bool k : known)
    if (!k) throw Error("transport basis is not connected");
}

// Path from source node `from_row` to target node `to_col` through the basis
// tree, returned as a sequence of basis edge ids.
std::vector<std::size_t> tree_path(const std::vector<BasicCell>& basis,
                                   std::size_t rows, std::size_t cols,
                                   std::size_t from_row, std::size_t to_col) {
  const TreeIndex tree(basis, rows, cols);
  const std::size_t n_nodes = rows + cols;
  const std::size_t target = rows + to_col;
  std::vector<std::size_t> parent_edge(n_nodes, SIZE_MAX);
  std::vector<std::size_t> parent_node(n_nodes, SIZE_MAX);
  std::vector<bool> seen(n_nodes, false);
  std::deque<std::size_t> frontier;
  seen[from_row] = true;
  frontier.push_back(from_row);
  while (!frontier.empty()) {
    const std::size_t node = frontier.front();
    frontier.pop_front();
    if (node == target) break;
    for (std::size_t e : tree.edges_at[node]) {
      const BasicCell& cell = basis[e];
      const std::size_t other = node < rows ? rows + cell.j : cell.i;
      if (seen[other]) continue;
      seen[other] = true;
      parent_edge[other] = e;
      parent_node[other] = node;
      frontier.push_back(other);
    }
  }
  if (!seen[target]) throw Error("transport basis is not connected");
  std::vector<std::size_t> path;
  for (std::size_t node = target; node != from_row; node = parent_node[node])
    path.push_back(parent_edge[node]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Re-derives the basis flows for the given marginals by stripping leaves of
// the spanning tree.  A tree basis determines its flows uniquely, so this
// transfers the optimal basis found for the perturbed marginals back to the
// unperturbed ones.
void rederive_flows(std::vector<BasicCell>& basis, std::size_t rows,
                    std::size_t cols, const std::vector<double>& supply,
                    const std::vector<double>& demand) {
  const std::size_t n_nodes = rows + cols;
  TreeIndex tree(basis, rows, cols);
  std::vector<double> remaining(n_nodes);
  for (std::size_t i = 0; i < rows; ++i) remaining[i] = supply[i];
  for (std::size_t j = 0; j < cols; ++j) remaining[rows + j] = demand[j];

  std::vector<std::size_t> degree(n_nodes);
  std::vector<bool> edge_done(basis.size(), false);
  std::deque<std::size_t> leaves;
  for (std::size_t node = 0; node < n_nodes; ++node) {
    degree[node] = tree.edges_at[node].size();
    if (degree[node] == 1) leaves.push_back(node);
  }
  std::size_t processed = 0;
  while (!leaves.empty()) {
    const std::size_t node = leaves.front();
    leaves.pop_front();
    if (degree[node] != 1) continue;
    std::size_t edge = SIZE_MAX;
    for (std::size_t e : tree.edges_at[node])
      if (!edge_done[e]) edge = e;
    if (edge == SIZE_MAX) continue;
    BasicCell& cell = basis[edge];
    cell.flow = remaining[node];
    const std::size_t other = node < rows ? rows + cell.j : cell.i;
    remaining[other] -= remaining[node];
    remaining[node] = 0.0;
    edge_done[edge] = true;
    ++processed;
    if (--degree[other] == 1) leaves.push_back(other);
    degree[node] = 0;
  }
  if (processed != basis.size())
    throw Error("transport basis flows could not be re-derived");

  // The optimal basis for the perturbed problem can be slightly infeasible
  // for the original one; the discrepancy is bounded by the total
  // perturbation, far below the marginal tolerance.
  for (BasicCell& cell : basis) {
    if (cell.flow < 0.0) {
      if (cell.flow < -kMarginalTol)
        throw Error("transport flows went negative beyond tolerance");
      cell.flow = 0.0;
    }
  }
}

TransportResult zero_plan(std::size_t rows, std::size_t cols,
                          const std::vector<double>& supply,
                          const std::vector<double>& demand) {
  TransportResult result;
  result.plan.mass = Matrix(rows, cols, 0.0);
  result.plan.source_marginals = supply;
  result.plan.target_marginals = demand;
  result.cost = 0.0;
  return result;
}

}  // namespace

TransportResult solve_transport(const std::vector<double>& supply,
                                const std::vector<double>& demand,
                                const Matrix& cost) {
  const std::size_t rows = supply.size();
  const std::size_t cols = demand.size();
  if (cost.rows() != rows || cost.cols() != cols)
    throw InvalidInputError("transport cost matrix shape must match the marginals");
  for (double entry : cost.data())
    if (!std::isfinite(entry) || entry < 0.0)
      throw InvalidInputError("transport costs must be non-negative and finite");
  for (double m : supply)
    if (!(m >= 0.0) || !std::isfinite(m))
      throw InvalidInputError("transport supplies must be non-negative and finite");
  for (double m : demand)
    if (!(m >= 0.0) || !std::isfinite(m))
      throw InvalidInputError("transport demands must be non-negative and finite");

  double supply_total = 0.0;
  double demand_total = 0.0;
  for (double m : supply) supply_total += m;
  for (double m : demand) demand_total += m;
  if (std::abs(supply_total - demand_total) > kMarginalTol)
    throw InfeasibleError("transport marginals disagree beyond tolerance");

  const double target_total = 0.5 * (supply_total + demand_total);
  if (supply_total <= kMarginalTol || demand_total <= kMarginalTol || rows == 0 ||
      cols == 0)
    return zero_plan(rows, cols, supply, demand);

  // Rescale both sides to the common mean so the instance balances exactly.
  std::vector<double> p(rows), q(cols);
  for (std::size_t i = 0; i < rows; ++i)
    p[i] = supply[i] * (target_total / supply_total);
  for (std::size_t j = 0; j < cols; ++j)
    q[j] = demand[j] * (target_total / demand_total);

  // Lexicographic perturbation: no two partial sums of perturbed masses tie,
  // so northwest-corner starts non-degenerate and pivots stay strict.
  std::vector<double> pp = p;
  std::vector<double> qq = q;
  for (std::size_t i = 0; i < rows; ++i)
    pp[i] += kPerturb * static_cast<double>(i + 1);
  qq[cols - 1] +=
      kPerturb * static_cast<double>(rows) * static_cast<double>(rows + 1) / 2.0;

  // Northwest-corner initial basis: always rows + cols - 1 cells, a
  // staircase, hence a spanning tree.
  std::vector<BasicCell> basis;
  basis.reserve(rows + cols - 1);
  {
    std::size_t i = 0;
    std::size_t j = 0;
    double a = pp[0];
    double b = qq[0];
    const std::size_t n_basic = rows + cols - 1;
    for (std::size_t step = 0; step < n_basic; ++step) {
      const double t = std::min(a, b);
      basis.push_back({i, j, t});
      if (step + 1 == n_basic) break;
      bool advance_row = a <= b;
      if (advance_row && i + 1 == rows) advance_row = false;
      if (!advance_row && j + 1 == cols) advance_row = true;
      if (advance_row) {
        b -= t;
        ++i;
        a = pp[i];
      } else {
        a -= t;
        ++j;
        b = qq[j];
      }
    }
  }

  std::vector<bool> is_basic(rows * cols, false);
  for (const BasicCell& cell : basis) is_basic[cell.i * cols + cell.j] = true;

  std::vector<double> u, v;
  const std::size_t max_pivots = 1000 + 100 * (rows + cols) * (rows + cols);
  for (std::size_t pivot = 0;; ++pivot) {
    if (pivot > max_pivots)
      throw Error("transport solver exceeded its pivot budget");
    solve_duals(basis, cost, rows, cols, u, v);

    // Entering cell: first non-basic cell, in row-major order, whose reduced
    // cost is clearly negative.  First-index selection keeps pivoting
    // deterministic and Bland-like.
    std::size_t enter_i = SIZE_MAX;
    std::size_t enter_j = SIZE_MAX;
    for (std::size_t i = 0; i < rows && enter_i == SIZE_MAX; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (is_basic[i * cols + j]) continue;
        if (cost(i, j) - u[i] - v[j] < -kPivotTol) {
          enter_i = i;
          enter_j = j;
          break;
        }
      }
    }
    if (enter_i == SIZE_MAX) break;

    // The entering cell closes exactly one cycle with the basis tree.  Signs
    // alternate along the cycle starting with + on the entering cell.
    const std::vector<std::size_t> path =
        tree_path(basis, rows, cols, enter_i, enter_j);
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leaving = SIZE_MAX;
    for (std::size_t t = 0; t < path.size(); t += 2) {
      const double flow = basis[path[t]].flow;
      if (flow < theta) {
        theta = flow;
        leaving = path[t];
      }
    }
    if (leaving == SIZE_MAX) throw Error("transport pivot found no leaving cell");
    for (std::size_t t = 0; t < path.size(); ++t) {
      if (t % 2 == 0)
        basis[path[t]].flow -= theta;
      else
        basis[path[t]].flow += theta;
    }
    is_basic[basis[leaving].i * cols + basis[leaving].j] = false;
    is_basic[enter_i * cols + enter_j] = true;
    basis[leaving] = {enter_i, enter_j, theta};
  }

  rederive_flows(basis, rows, cols, p, q);

  TransportResult result;
  result.plan.mass = Matrix(rows, cols, 0.0);
  for (const BasicCell& cell : basis) result.plan.mass(cell.i, cell.j) = cell.flow;
  result.plan.source_marginals = p;
  result.plan.target_marginals = q;
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      total += result.plan.mass(i, j) * cost(i, j);
  result.cost = total;
  return result;
}

}  // namespace colldist

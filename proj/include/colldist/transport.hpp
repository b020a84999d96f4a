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

#ifndef COLLDIST_TRANSPORT_HPP
#define COLLDIST_TRANSPORT_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "colldist/assignment.hpp"
#include "colldist/errors.hpp"
#include "colldist/ground.hpp"
#include "colldist/matrix.hpp"
#include "colldist/multiset.hpp"

namespace colldist {

// A probability distribution with finite support.  Masses are strictly
// positive and sum to one; the support is listed in value order.
template <typename T>
struct DiscreteDistribution {
  std::vector<T> support;
  std::vector<double> masses;
};

// Normalizes a multiset into the distribution that puts mass count/size on
// each distinct value.
template <typename T>
DiscreteDistribution<T> to_distribution(const Multiset<T>& x) {
  if (x.empty())
    throw EmptyInputError("cannot normalize an empty multiset into a distribution");
  DiscreteDistribution<T> dist;
  dist.support.reserve(x.support_size());
  dist.masses.reserve(x.support_size());
  const double total = static_cast<double>(x.size());
  for (const auto& [value, count] : x.counts()) {
    dist.support.push_back(value);
    dist.masses.push_back(static_cast<double>(count) / total);
  }
  return dist;
}

// A feasible transport plan: mass(i, j) is the amount moved from source i to
// target j.  The marginals recorded are the ones the plan was solved for.
struct TransportPlan {
  Matrix mass;
  std::vector<double> source_marginals;
  std::vector<double> target_marginals;
};

struct TransportResult {
  TransportPlan plan;
  double cost = 0.0;
};

// Minimizes sum_ij mass(i,j) * cost(i,j) over plans with the given
// marginals.  Costs and marginals must be non-negative and finite.
// Marginal totals may disagree by at most 1e-9; within that
// tolerance both sides are rescaled to their common mean before solving.
// The solver perturbs the marginals internally to ward off degenerate
// pivoting, then re-derives the flows and the reported cost from the
// unperturbed marginals, so the answer does not carry the perturbation.
TransportResult solve_transport(const std::vector<double>& supply,
                                const std::vector<double>& demand,
                                const Matrix& cost);

// Independent reference for the transport value between two multiset
// distributions: replicate every element up to the least common multiple of
// the collection sizes and solve the resulting (equal-size) assignment
// problem.  By construction this searches only permutation plans, and for
// equal-mass marginals some permutation plan is optimal, so the value equals
// the transport optimum.  Guarded: the replicated size may not exceed
// `max_replicated`.
template <typename T>
double emd_oracle_lcm(const Multiset<T>& x, const Multiset<T>& y,
                      const GroundMetric<T>& ground,
                      std::size_t max_replicated = 256) {
  if (x.empty() || y.empty())
    throw EmptyInputError("transport reference needs non-empty multisets");
  const auto nx = static_cast<std::size_t>(x.size());
  const auto ny = static_cast<std::size_t>(y.size());
  const std::size_t l = std::lcm(nx, ny);
  if (l > max_replicated)
    throw ScaleLimitError("replicated assignment would exceed the size guard");

  const std::vector<T> xs = x.expanded();
  const std::vector<T> ys = y.expanded();
  const std::size_t rep_x = l / nx;
  const std::size_t rep_y = l / ny;

  CostMatrix cost(l, l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b)
      cost(a, b) = ground(xs[a / rep_x], ys[b / rep_y]);
  return solve_assignment(cost).total_cost / static_cast<double>(l);
}

}  // namespace colldist

#endif  // COLLDIST_TRANSPORT_HPP

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
//
// Distances between multisets over a common ground metric.  Four families:
//
//   matching_distance                minimum matching cost, unmatched
//                                    elements charged their distance to the
//                                    null element
//   fixed_penalty_matching_distance  same, but every unmatched element costs
//                                    a flat rho
//   emd                              earth mover's distance between the
//                                    normalized element distributions
//   semd                             emd blended with a distance on the
//                                    collection sizes, restoring identity
//                                    of indiscernibles

#ifndef COLLDIST_SETDIST_HPP
#define COLLDIST_SETDIST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "colldist/assignment.hpp"
#include "colldist/errors.hpp"
#include "colldist/ground.hpp"
#include "colldist/multiset.hpp"
#include "colldist/transport.hpp"

namespace colldist {

// A partial pairing between two multisets.  Pairs are (x-slot, y-slot)
// indices into Multiset::expanded(); each slot may appear at most once.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// How unmatched elements are charged.
class PenaltySpec {
 public:
  // Each unmatched element costs its ground distance to the null element.
  static PenaltySpec null_reference() { return PenaltySpec(false, 0.0); }

  // Each unmatched element costs the same flat amount rho > 0.
  static PenaltySpec fixed(double rho) {
    if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
    return PenaltySpec(true, rho);
  }

  bool is_fixed() const { return fixed_; }
  double rho() const { return rho_; }

 private:
  PenaltySpec(bool fixed, double rho) : fixed_(fixed), rho_(rho) {}
  bool fixed_;
  double rho_;
};

namespace detail {

template <typename T>
void validate_matching(const Matching& m, std::size_t n_x, std::size_t n_y) {
  std::vector<bool> x_used(n_x, false);
  std::vector<bool> y_used(n_y, false);
  for (const auto& [a, b] : m.pairs) {
    if (a >= n_x || b >= n_y)
      throw InvalidInputError("matching refers to a slot outside the multisets");
    if (x_used[a] || y_used[b])
      throw InvalidInputError("matching uses a slot more than once");
    x_used[a] = true;
    y_used[b] = true;
  }
}

}  // namespace detail

// Cost of a specific matching: paired distances plus the penalty for every
// element left out on either side.
template <typename T>
double matching_cost(const Matching& m, const Multiset<T>& x, const Multiset<T>& y,
                     const GroundMetric<T>& ground, const PenaltySpec& penalty) {
  const std::vector<T> xs = x.expanded();
  const std::vector<T> ys = y.expanded();
  detail::validate_matching<T>(m, xs.size(), ys.size());

  double cost = 0.0;
  std::vector<bool> x_used(xs.size(), false);
  std::vector<bool> y_used(ys.size(), false);
  for (const auto& [a, b] : m.pairs) {
    cost += ground(xs[a], ys[b]);
    x_used[a] = true;
    y_used[b] = true;
  }
  if (penalty.is_fixed()) {
    const auto unmatched =
        static_cast<double>(xs.size() + ys.size() - 2 * m.pairs.size());
    cost += penalty.rho() * unmatched;
  } else {
    for (std::size_t a = 0; a < xs.size(); ++a)
      if (!x_used[a]) cost += ground.null_distance(xs[a]);
    for (std::size_t b = 0; b < ys.size(); ++b)
      if (!y_used[b]) cost += ground.null_distance(ys[b]);
  }
  return cost;
}

// A distance value together with the matching that attains it.  The witness
// is advisory: under ties, only the value is stable.
struct SetDistanceResult {
  double value = 0.0;
  Matching matching;
};

namespace detail {

// Reads a matching back out of a solved MatchingProblem.  For the complete
// construction, rows come from the smaller collection and every column is a
// real element; for the all-matchings construction both index ranges carry
// placeholders past the real elements.
inline Matching decode_matching(const MatchingProblem& problem,
                                const AssignmentResult& solved) {
  Matching m;
  if (problem.all_matchings) {
    for (std::size_t i = 0; i < problem.n_x; ++i)
      if (solved.assignment[i] < problem.n_y) m.pairs.push_back({i, solved.assignment[i]});
    return m;
  }
  const std::size_t n_small = std::min(problem.n_x, problem.n_y);
  for (std::size_t i = 0; i < n_small; ++i) {
    if (problem.swapped)
      m.pairs.push_back({solved.assignment[i], i});
    else
      m.pairs.push_back({i, solved.assignment[i]});
  }
  return m;
}

}  // namespace detail

// Minimum matching cost with unmatched elements charged their distance to
// the null element.  A complete matching always attains the optimum, so the
// square assignment reduction over the larger collection size is exact.
template <typename T>
SetDistanceResult matching_distance(const Multiset<T>& x, const Multiset<T>& y,
                                    const GroundMetric<T>& ground) {
  if (!ground.has_null_element())
    throw ConfigError("matching distance requires a ground metric with a null element");
  const std::function<double(const T&)> penalty = [&ground](const T& e) {
    return ground.null_distance(e);
  };
  const MatchingProblem problem = build_cost_matrix_complete(x, y, ground, penalty);
  const AssignmentResult solved = solve_assignment(problem.cost);
  return {solved.total_cost, detail::decode_matching(problem, solved)};
}

// Minimum matching cost with a flat penalty rho per unmatched element.  When
// rho is at least half the largest pairwise distance in play, a complete
// matching is optimal and the smaller square construction suffices;
// otherwise the optimum may leave elements on both sides unmatched and the
// solver must range over all matchings.
template <typename T>
SetDistanceResult fixed_penalty_matching_distance(const Multiset<T>& x,
                                                  const Multiset<T>& y,
                                                  const GroundMetric<T>& ground,
                                                  double rho) {
  if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
  const std::function<double(const T&)> penalty = [rho](const T&) { return rho; };

  bool complete_suffices = false;
  if (ground.has_upper_bound() && rho >= ground.upper_bound() / 2.0) {
    complete_suffices = true;
  } else {
    double max_pairwise = 0.0;
    for (const auto& [xv, xc] : x.counts()) {
      (void)xc;
      for (const auto& [yv, yc] : y.counts()) {
        (void)yc;
        max_pairwise = std::max(max_pairwise, ground(xv, yv));
      }
    }
    complete_suffices = rho >= max_pairwise / 2.0;
  }

  const MatchingProblem problem =
      complete_suffices ? build_cost_matrix_complete(x, y, ground, penalty)
                        : build_cost_matrix_all(x, y, ground, penalty);
  const AssignmentResult solved = solve_assignment(problem.cost);
  return {solved.total_cost, detail::decode_matching(problem, solved)};
}

struct EmdResult {
  double value = 0.0;
  TransportPlan plan;
};

// Earth mover's distance: the minimum-cost transport between the two
// normalized element distributions.  Blind to multiplicity scaling, so it is
// a pseudometric only; see semd for the metric repair.
template <typename T>
EmdResult emd(const Multiset<T>& x, const Multiset<T>& y,
              const GroundMetric<T>& ground) {
  const DiscreteDistribution<T> px = to_distribution(x);
  const DiscreteDistribution<T> py = to_distribution(y);
  Matrix cost(px.support.size(), py.support.size());
  for (std::size_t i = 0; i < px.support.size(); ++i)
    for (std::size_t j = 0; j < py.support.size(); ++j)
      cost(i, j) = ground(px.support[i], py.support[j]);
  TransportResult solved = solve_transport(px.masses, py.masses, cost);
  return {solved.cost, std::move(solved.plan)};
}

// Convex blend of the earth mover's distance with a distance on collection
// sizes.  With a genuine metric on the sizes (default: absolute difference),
// the blend separates proportional multisets and is a full metric.
template <typename T>
double semd(const Multiset<T>& x, const Multiset<T>& y, const GroundMetric<T>& ground,
            double tau,
            const std::function<double(long long, long long)>& size_distance = {}) {
  if (!(tau > 0.0 && tau < 1.0))
    throw ConfigError("size-aware emd weight must lie strictly between 0 and 1");
  const double size_term =
      size_distance ? size_distance(x.size(), y.size())
                    : std::abs(static_cast<double>(x.size() - y.size()));
  return tau * emd(x, y, ground).value + (1.0 - tau) * size_term;
}

}  // namespace colldist

#endif  // COLLDIST_SETDIST_HPP

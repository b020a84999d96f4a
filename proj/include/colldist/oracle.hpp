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
// Brute-force reference enumerations.  These exist so the optimizing solvers
// can be checked against exhaustive minimization on small instances; clarity
// beats speed here, and hard size guards keep the exponential blowups out of
// reach.

#ifndef COLLDIST_ORACLE_HPP
#define COLLDIST_ORACLE_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "colldist/errors.hpp"
#include "colldist/multiset.hpp"
#include "colldist/seqdist.hpp"
#include "colldist/setdist.hpp"

namespace colldist {

// Every matching between nx and ny slots, the empty matching included.
// Guarded by nx * ny <= 20.
std::vector<Matching> enumerate_matchings(std::size_t n_x, std::size_t n_y);

// Every order-preserving matching between nx and ny slots, derived by
// filtering enumerate_matchings.  Same guard.
std::vector<MonotoneMatching> enumerate_monotone_matchings(std::size_t n_x,
                                                           std::size_t n_y);

// Every coupling between sequences of lengths n and m (n, m >= 1), i.e.
// every lattice path from (0,0) to (n-1,m-1) with unit right, down and
// diagonal steps.  Guarded by n + m <= 12.
std::vector<Coupling> enumerate_couplings(std::size_t n, std::size_t m);

template <typename T>
std::vector<Matching> enumerate_matchings(const Multiset<T>& x, const Multiset<T>& y) {
  return enumerate_matchings(static_cast<std::size_t>(x.size()),
                             static_cast<std::size_t>(y.size()));
}

template <typename T>
std::vector<MonotoneMatching> enumerate_monotone_matchings(const Sequence<T>& x,
                                                           const Sequence<T>& y) {
  return enumerate_monotone_matchings(x.size(), y.size());
}

template <typename T>
std::vector<Coupling> enumerate_couplings(const Sequence<T>& x, const Sequence<T>& y) {
  return enumerate_couplings(x.size(), y.size());
}

// Exact minimum of a cost function over an enumerated family of relations.
template <typename Relation, typename CostFn>
double brute_min(const std::vector<Relation>& relations, const CostFn& cost) {
  if (relations.empty())
    throw EmptyInputError("cannot take a minimum over an empty enumeration");
  double best = std::numeric_limits<double>::infinity();
  for (const Relation& relation : relations) {
    const double value = cost(relation);
    if (value < best) best = value;
  }
  return best;
}

}  // namespace colldist

#endif  // COLLDIST_ORACLE_HPP

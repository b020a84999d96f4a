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

#ifndef COLLDIST_PAIRWISE_HPP
#define COLLDIST_PAIRWISE_HPP

#include <cstddef>

#include "colldist/corpus.hpp"
#include "colldist/distconfig.hpp"
#include "colldist/matrix.hpp"

namespace colldist {

// Symmetric matrix of configured distances between all corpus observations,
// zero diagonal.  Pairs of the strict upper triangle are statically
// partitioned across `workers` threads; every pair is evaluated by a pure
// function over shared immutable data, so the result is independent of the
// worker count and of scheduling.  A failing pair aborts the computation
// with an error naming the observation ids involved.
DistanceMatrix pairwise_matrix(const Corpus& corpus, const DistanceConfig& config,
                               std::size_t workers = 1);

}  // namespace colldist

#endif  // COLLDIST_PAIRWISE_HPP

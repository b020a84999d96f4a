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

#include "colldist/pairwise.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "colldist/errors.hpp"
#include "colldist/ground.hpp"

namespace colldist {

namespace {

// Row-major enumeration of the strict upper triangle: pair k of n points is
// (i, j) with i < j.  first_of_row[i] is the index of pair (i, i+1) and is
// strictly increasing, so the row is one before the first entry beyond k.
std::pair<std::size_t, std::size_t> pair_from_index(
    std::size_t k, const std::vector<std::size_t>& first_of_row) {
  const auto it = std::upper_bound(first_of_row.begin(), first_of_row.end(), k);
  const auto i = static_cast<std::size_t>(it - first_of_row.begin()) - 1;
  return {i, i + 1 + (k - first_of_row[i])};
}

struct PairFailure {
  std::size_t pair_index;
  std::size_t i;
  std::size_t j;
  std::string message;
};

}  // namespace

DistanceMatrix pairwise_matrix(const Corpus& corpus, const DistanceConfig& config,
                               std::size_t workers) {
  if (workers < 1) throw ConfigError("worker count must be at least 1");
  validate_corpus_for_config(corpus, config);

  const std::size_t n = corpus.size();
  DistanceMatrix out(n, n, 0.0);
  if (n < 2) return out;

  const ObservationDistance base = make_base_observation_distance(config);

  // With an outer normalization the reference distances d(X_i, c) recur in
  // every pair involving i; compute them once up front.
  std::vector<double> reference_distance;
  if (config.steinhaus_outer) {
    const std::vector<LabeledPath> reference = resolve_outer_reference(config, &corpus);
    reference_distance.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      reference_distance[i] = base(corpus.observations[i].paths, reference);
  }

  std::vector<std::size_t> first_of_row(n, 0);
  for (std::size_t i = 1; i < n; ++i)
    first_of_row[i] = first_of_row[i - 1] + (n - i);
  const std::size_t n_pairs = n * (n - 1) / 2;

  auto evaluate_pair = [&](std::size_t i, std::size_t j) {
    const double d = base(corpus.observations[i].paths, corpus.observations[j].paths);
    if (!config.steinhaus_outer) return d;
    const double denom = reference_distance[i] + reference_distance[j] + d;
    return denom == 0.0 ? 0.0 : 2.0 * d / denom;
  };

  // Strided static partition: worker w takes pairs w, w + workers, ...  Each
  // pair writes its own two mirrored cells, so workers never contend.
  const std::size_t n_workers = std::min(workers, n_pairs);
  std::vector<std::optional<PairFailure>> failures(n_workers);
  auto run_worker = [&](std::size_t w) {
    for (std::size_t k = w; k < n_pairs; k += n_workers) {
      const auto [i, j] = pair_from_index(k, first_of_row);
      try {
        const double d = evaluate_pair(i, j);
        out(i, j) = d;
        out(j, i) = d;
      } catch (const std::exception& e) {
        failures[w] = PairFailure{k, i, j, e.what()};
        return;
      }
    }
  };

  if (n_workers <= 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w)
      pool.emplace_back(run_worker, w);
    for (std::thread& t : pool) t.join();
  }

  // Report the failure of the earliest pair so the message is deterministic
  // even when several workers trip at once.
  const PairFailure* first_failure = nullptr;
  for (const auto& failure : failures) {
    if (!failure) continue;
    if (first_failure == nullptr || failure->pair_index < first_failure->pair_index)
      first_failure = &*failure;
  }
  if (first_failure != nullptr)
    throw Error("distance evaluation failed for pair (\"" +
                corpus.observations[first_failure->i].id + "\", \"" +
                corpus.observations[first_failure->j].id + "\"): " +
                first_failure->message);
  return out;
}

}  // namespace colldist

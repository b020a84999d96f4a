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

#ifndef COLLDIST_DISTCONFIG_HPP
#define COLLDIST_DISTCONFIG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colldist/corpus.hpp"
#include "colldist/element.hpp"
#include "colldist/ground.hpp"

namespace colldist {

// Which collection distance compares two observations.
enum class Family {
  kMatching,     // multiset, null-element penalties
  kFpMatching,   // multiset, flat penalty rho
  kEmd,          // multiset, earth mover's distance
  kSemd,         // multiset, emd blended with a size distance (weight tau)
  kEdit,         // sequence, null-element penalties
  kFpEdit,       // sequence, flat penalty rho
  kDtw,          // sequence, time warping
  kFpDtw,        // sequence, time warping with warp penalty rho
};

// Which distance compares two elements (labeled paths).
enum class GroundKind {
  kLcs,        // longest-common-subsequence distance between paths
  kLsp,        // longest-common-subpath distance between paths
  kDiscrete,   // 0 when equal, 1 otherwise
  kScalarAbs,  // |a - b| on single-label numeric paths
};

Family family_from_string(const std::string& name);
GroundKind ground_from_string(const std::string& name);
const char* to_string(Family family);
const char* to_string(GroundKind ground);

// All family/ground names, for CLI help text.
std::vector<std::string> family_names();
std::vector<std::string> ground_names();

struct DistanceConfig {
  Family family = Family::kMatching;
  GroundKind ground = GroundKind::kLcs;
  std::optional<double> rho;
  std::optional<double> tau;
  bool steinhaus_ground = false;
  bool steinhaus_outer = false;
  // Reference collection for the outer normalization: "empty" (the empty
  // observation) or "id:<observation id>" resolved against the corpus.
  std::string outer_reference = "empty";
};

// True for families that read observations as ordered sequences.
bool family_is_sequence_based(Family family);

// True for families that cannot evaluate empty observations.
bool family_rejects_empty(Family family);

// Cross-field validation: rho exactly for the fixed-penalty families, tau
// exactly for the size-aware emd, a usable outer reference.  Throws
// ConfigError with an actionable message.
void validate_config(const DistanceConfig& config);

// The element distance the configuration asks for, null element and (when
// the ground is bounded) upper bound included.
GroundMetric<LabeledPath> make_ground_metric(const DistanceConfig& config);

using ObservationDistance =
    std::function<double(const std::vector<LabeledPath>&, const std::vector<LabeledPath>&)>;

// Distance between two observations under the configuration, before any
// outer normalization.
ObservationDistance make_base_observation_distance(const DistanceConfig& config);

// Full configured distance, outer normalization included.  A corpus is
// needed only to resolve an "id:..." outer reference.
ObservationDistance make_observation_distance(const DistanceConfig& config,
                                              const Corpus* corpus = nullptr);

// Resolves the configured outer reference to a concrete observation value.
std::vector<LabeledPath> resolve_outer_reference(const DistanceConfig& config,
                                                 const Corpus* corpus);

// Checks every observation is evaluable under the configuration: non-empty
// where the family demands it, single-label numeric paths under the scalar
// ground.  Errors name the offending observation.
void validate_corpus_for_config(const Corpus& corpus, const DistanceConfig& config);

// Deterministic generator of random observations valid for the
// configuration, used by the audit command's synthetic mode.  Sizes and path
// shapes are biased small so that degenerate configurations (repeated
// elements, proportional multisets) occur often.
std::function<std::vector<LabeledPath>()> make_synthetic_sampler(
    const DistanceConfig& config, std::uint64_t seed);

}  // namespace colldist

#endif  // COLLDIST_DISTCONFIG_HPP

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "colldist/distconfig.hpp"
#include "colldist/errors.hpp"
#include "colldist/ground.hpp"

using colldist::Corpus;
using colldist::DistanceConfig;
using colldist::Family;
using colldist::GroundKind;
using colldist::LabeledPath;
using colldist::Observation;

namespace {

using Obs = std::vector<LabeledPath>;

DistanceConfig config_for(Family family, GroundKind ground = GroundKind::kLcs) {
  DistanceConfig config;
  config.family = family;
  config.ground = ground;
  if (family == Family::kFpMatching || family == Family::kFpEdit ||
      family == Family::kFpDtw)
    config.rho = 0.5;
  if (family == Family::kSemd) config.tau = 0.5;
  return config;
}

}  // namespace

TEST_CASE("family and ground names round trip") {
  for (const std::string& name : colldist::family_names())
    CHECK(colldist::to_string(colldist::family_from_string(name)) == name);
  for (const std::string& name : colldist::ground_names())
    CHECK(colldist::to_string(colldist::ground_from_string(name)) == name);
  CHECK(colldist::family_names().size() == 8);
  CHECK(colldist::ground_names().size() == 4);
  CHECK_THROWS_AS(colldist::family_from_string("bogus"), colldist::ConfigError);
  CHECK_THROWS_AS(colldist::ground_from_string("bogus"), colldist::ConfigError);
}

TEST_CASE("family classification") {
  CHECK_FALSE(colldist::family_is_sequence_based(Family::kMatching));
  CHECK_FALSE(colldist::family_is_sequence_based(Family::kFpMatching));
  CHECK_FALSE(colldist::family_is_sequence_based(Family::kEmd));
  CHECK_FALSE(colldist::family_is_sequence_based(Family::kSemd));
  CHECK(colldist::family_is_sequence_based(Family::kEdit));
  CHECK(colldist::family_is_sequence_based(Family::kFpEdit));
  CHECK(colldist::family_is_sequence_based(Family::kDtw));
  CHECK(colldist::family_is_sequence_based(Family::kFpDtw));

  CHECK_FALSE(colldist::family_rejects_empty(Family::kMatching));
  CHECK_FALSE(colldist::family_rejects_empty(Family::kFpMatching));
  CHECK(colldist::family_rejects_empty(Family::kEmd));
  CHECK(colldist::family_rejects_empty(Family::kSemd));
  CHECK_FALSE(colldist::family_rejects_empty(Family::kEdit));
  CHECK_FALSE(colldist::family_rejects_empty(Family::kFpEdit));
  CHECK(colldist::family_rejects_empty(Family::kDtw));
  CHECK(colldist::family_rejects_empty(Family::kFpDtw));
}

TEST_CASE("config validation enforces the parameter contract") {
  CHECK_NOTHROW(colldist::validate_config(config_for(Family::kMatching)));
  CHECK_NOTHROW(colldist::validate_config(config_for(Family::kFpMatching)));
  CHECK_NOTHROW(colldist::validate_config(config_for(Family::kSemd)));

  DistanceConfig missing_rho = config_for(Family::kFpEdit);
  missing_rho.rho.reset();
  CHECK_THROWS_AS(colldist::validate_config(missing_rho), colldist::ConfigError);

  DistanceConfig zero_rho = config_for(Family::kFpDtw);
  zero_rho.rho = 0.0;
  CHECK_THROWS_AS(colldist::validate_config(zero_rho), colldist::ConfigError);

  DistanceConfig stray_rho = config_for(Family::kMatching);
  stray_rho.rho = 1.0;
  CHECK_THROWS_AS(colldist::validate_config(stray_rho), colldist::ConfigError);

  DistanceConfig missing_tau = config_for(Family::kSemd);
  missing_tau.tau.reset();
  CHECK_THROWS_AS(colldist::validate_config(missing_tau), colldist::ConfigError);

  for (const double bad_tau : {0.0, 1.0, -0.5, 1.5}) {
    DistanceConfig config = config_for(Family::kSemd);
    config.tau = bad_tau;
    CHECK_THROWS_AS(colldist::validate_config(config), colldist::ConfigError);
  }

  DistanceConfig stray_tau = config_for(Family::kEdit);
  stray_tau.tau = 0.5;
  CHECK_THROWS_AS(colldist::validate_config(stray_tau), colldist::ConfigError);

  DistanceConfig bad_reference = config_for(Family::kMatching);
  bad_reference.outer_reference = "bogus";
  CHECK_THROWS_AS(colldist::validate_config(bad_reference), colldist::ConfigError);
  bad_reference.outer_reference = "id:";
  CHECK_THROWS_AS(colldist::validate_config(bad_reference), colldist::ConfigError);
  bad_reference.outer_reference = "id:obs-1";
  CHECK_NOTHROW(colldist::validate_config(bad_reference));

  // Normalizing around the empty observation is impossible for families
  // that cannot evaluate empty inputs.
  DistanceConfig emd_empty_ref = config_for(Family::kEmd);
  emd_empty_ref.steinhaus_outer = true;
  CHECK_THROWS_AS(colldist::validate_config(emd_empty_ref), colldist::ConfigError);
  emd_empty_ref.outer_reference = "id:obs-1";
  CHECK_NOTHROW(colldist::validate_config(emd_empty_ref));
}

TEST_CASE("ground metric construction") {
  const LabeledPath a = {"a"};
  const LabeledPath b = {"b"};
  const LabeledPath ab = {"a", "b"};

  SUBCASE("lcs") {
    const auto ground = colldist::make_ground_metric(config_for(Family::kMatching));
    CHECK(ground(a, b) == 2.0);
    CHECK(ground(a, ab) == 1.0);
    CHECK(ground.null_element() == LabeledPath{});
    CHECK(ground.null_distance(ab) == 2.0);
    CHECK_FALSE(ground.has_upper_bound());
  }

  SUBCASE("lcs normalized") {
    DistanceConfig config = config_for(Family::kMatching);
    config.steinhaus_ground = true;
    const auto ground = colldist::make_ground_metric(config);
    CHECK(ground(a, b) == 1.0);
    CHECK(ground(a, ab) == 0.5);
    CHECK(ground(a, a) == 0.0);
    CHECK(ground.upper_bound() == 1.0);
  }

  SUBCASE("lsp") {
    const auto ground = colldist::make_ground_metric(
        config_for(Family::kMatching, GroundKind::kLsp));
    CHECK(ground(LabeledPath{"a", "b", "a"}, LabeledPath{"a", "a"}) == 3.0);
    CHECK(ground(a, a) == 0.0);
    CHECK(ground.null_distance(ab) == 2.0);
  }

  SUBCASE("discrete") {
    const auto ground = colldist::make_ground_metric(
        config_for(Family::kMatching, GroundKind::kDiscrete));
    CHECK(ground(a, a) == 0.0);
    CHECK(ground(a, b) == 1.0);
    CHECK(ground.upper_bound() == 1.0);
  }

  SUBCASE("scalar") {
    const auto ground = colldist::make_ground_metric(
        config_for(Family::kMatching, GroundKind::kScalarAbs));
    CHECK(ground(LabeledPath{"3"}, LabeledPath{"5"}) == 2.0);
    CHECK(ground.null_element() == LabeledPath{"0"});
    CHECK(ground.null_distance(LabeledPath{"7"}) == 7.0);
    CHECK_THROWS_AS(ground(LabeledPath{"x"}, LabeledPath{"1"}),
                    colldist::InvalidInputError);
    CHECK_THROWS_AS(ground(LabeledPath{"1", "2"}, LabeledPath{"1"}),
                    colldist::InvalidInputError);
  }
}

TEST_CASE("base distances follow the configured family") {
  const Obs first = {{"a"}};
  const Obs second = {{"b"}};
  const Obs both = {{"a"}, {"b"}};
  const Obs swapped = {{"b"}, {"a"}};

  SUBCASE("matching ignores order, edit does not") {
    const auto matching = colldist::make_base_observation_distance(
        config_for(Family::kMatching, GroundKind::kDiscrete));
    const auto edit = colldist::make_base_observation_distance(
        config_for(Family::kEdit, GroundKind::kDiscrete));
    CHECK(matching(both, swapped) == 0.0);
    CHECK(edit(both, swapped) == 2.0);
    CHECK(matching(first, second) == 1.0);
  }

  SUBCASE("fixed penalty boundaries") {
    const auto fp_edit = colldist::make_base_observation_distance(
        config_for(Family::kFpEdit, GroundKind::kDiscrete));
    CHECK(fp_edit({}, both) == 1.0);  // two insertions at rho = 0.5
  }

  SUBCASE("size-aware emd blends in the size gap") {
    const auto blend = colldist::make_base_observation_distance(
        config_for(Family::kSemd, GroundKind::kScalarAbs));
    CHECK(blend({{"1"}}, {{"1"}, {"1"}}) == 0.5);
  }

  SUBCASE("construction validates the config") {
    DistanceConfig config = config_for(Family::kFpMatching);
    config.rho.reset();
    CHECK_THROWS_AS(colldist::make_base_observation_distance(config),
                    colldist::ConfigError);
  }
}

TEST_CASE("outer reference resolution") {
  Corpus corpus;
  corpus.observations.push_back({"obs-1", {{"a"}}, {}});
  corpus.observations.push_back({"obs-2", {{"a"}, {"b"}}, {}});

  DistanceConfig config = config_for(Family::kMatching);
  CHECK(colldist::resolve_outer_reference(config, nullptr).empty());

  config.outer_reference = "id:obs-2";
  CHECK(colldist::resolve_outer_reference(config, &corpus) ==
        Obs{{"a"}, {"b"}});
  CHECK_THROWS_AS(colldist::resolve_outer_reference(config, nullptr),
                  colldist::ConfigError);
  config.outer_reference = "id:missing";
  CHECK_THROWS_AS(colldist::resolve_outer_reference(config, &corpus),
                  colldist::ConfigError);
}

TEST_CASE("outer normalization wraps the base distance") {
  const Obs first = {{"a"}};
  const Obs second = {{"b"}};

  DistanceConfig config = config_for(Family::kMatching, GroundKind::kDiscrete);
  config.steinhaus_outer = true;
  const auto base = colldist::make_base_observation_distance(config);
  const auto outer = colldist::make_observation_distance(config);

  // Around the empty observation both unary distances are 1 and the pair
  // distance is 1, so the normalized value is 2 / 3.
  CHECK(base(first, second) == 1.0);
  CHECK(outer(first, second) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(outer(first, first) == 0.0);

  Corpus corpus;
  corpus.observations.push_back({"hub", {{"a"}}, {}});
  config.outer_reference = "id:hub";
  const auto around_hub = colldist::make_observation_distance(config, &corpus);
  const double expected =
      2.0 * base(first, second) /
      (base(first, corpus.observations[0].paths) +
       base(second, corpus.observations[0].paths) + base(first, second));
  CHECK(around_hub(first, second) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("corpus validation names the offending observation") {
  Corpus corpus;
  corpus.observations.push_back({"good", {{"a"}}, {}});
  corpus.observations.push_back({"hollow", {}, {}});

  CHECK_NOTHROW(colldist::validate_corpus_for_config(
      corpus, config_for(Family::kMatching)));

  try {
    colldist::validate_corpus_for_config(corpus, config_for(Family::kEmd));
    FAIL("expected a config error");
  } catch (const colldist::ConfigError& e) {
    CHECK(std::string(e.what()).find("hollow") != std::string::npos);
  }

  Corpus words;
  words.observations.push_back({"numeric", {{"3"}}, {}});
  words.observations.push_back({"wordy", {{"three"}}, {}});
  try {
    colldist::validate_corpus_for_config(
        words, config_for(Family::kMatching, GroundKind::kScalarAbs));
    FAIL("expected a config error");
  } catch (const colldist::ConfigError& e) {
    CHECK(std::string(e.what()).find("wordy") != std::string::npos);
  }
}

TEST_CASE("synthetic sampler is deterministic and respects the config") {
  const DistanceConfig matching = config_for(Family::kMatching);
  auto first = colldist::make_synthetic_sampler(matching, 99);
  auto second = colldist::make_synthetic_sampler(matching, 99);
  auto other_seed = colldist::make_synthetic_sampler(matching, 100);

  bool any_difference = false;
  bool any_empty = false;
  for (int i = 0; i < 500; ++i) {
    const Obs a = first();
    CHECK(a == second());
    if (a != other_seed()) any_difference = true;
    if (a.empty()) any_empty = true;
    for (const LabeledPath& path : a) CHECK(!path.empty());
  }
  CHECK(any_difference);
  CHECK(any_empty);

  auto no_empties = colldist::make_synthetic_sampler(config_for(Family::kEmd), 99);
  for (int i = 0; i < 200; ++i) CHECK(!no_empties().empty());

  auto scalar = colldist::make_synthetic_sampler(
      config_for(Family::kMatching, GroundKind::kScalarAbs), 7);
  const auto ground = colldist::make_ground_metric(
      config_for(Family::kMatching, GroundKind::kScalarAbs));
  for (int i = 0; i < 200; ++i)
    for (const LabeledPath& path : scalar())
      CHECK_NOTHROW(ground.null_distance(path));
}

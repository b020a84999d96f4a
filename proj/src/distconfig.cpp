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

#include "colldist/distconfig.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <random>
#include <string>

#include "colldist/errors.hpp"
#include "colldist/multiset.hpp"
#include "colldist/seqdist.hpp"
#include "colldist/setdist.hpp"

namespace colldist {

namespace {

double parse_scalar_label(const LabeledPath& path) {
  if (path.size() != 1)
    throw InvalidInputError("the scalar ground needs exactly one label per path");
  const std::string& text = path[0];
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(value))
    throw InvalidInputError("label is not a finite number: \"" + text + "\"");
  return value;
}

Multiset<LabeledPath> bag(const std::vector<LabeledPath>& paths) {
  return Multiset<LabeledPath>(paths);
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "matching") return Family::kMatching;
  if (name == "fp-matching") return Family::kFpMatching;
  if (name == "emd") return Family::kEmd;
  if (name == "semd") return Family::kSemd;
  if (name == "edit") return Family::kEdit;
  if (name == "fp-edit") return Family::kFpEdit;
  if (name == "dtw") return Family::kDtw;
  if (name == "fp-dtw") return Family::kFpDtw;
  throw ConfigError("unknown distance family: " + name);
}

GroundKind ground_from_string(const std::string& name) {
  if (name == "lcs") return GroundKind::kLcs;
  if (name == "lsp") return GroundKind::kLsp;
  if (name == "discrete") return GroundKind::kDiscrete;
  if (name == "scalar-abs") return GroundKind::kScalarAbs;
  throw ConfigError("unknown ground distance: " + name);
}

const char* to_string(Family family) {
  switch (family) {
    case Family::kMatching: return "matching";
    case Family::kFpMatching: return "fp-matching";
    case Family::kEmd: return "emd";
    case Family::kSemd: return "semd";
    case Family::kEdit: return "edit";
    case Family::kFpEdit: return "fp-edit";
    case Family::kDtw: return "dtw";
    case Family::kFpDtw: return "fp-dtw";
  }
  return "unknown";
}

const char* to_string(GroundKind ground) {
  switch (ground) {
    case GroundKind::kLcs: return "lcs";
    case GroundKind::kLsp: return "lsp";
    case GroundKind::kDiscrete: return "discrete";
    case GroundKind::kScalarAbs: return "scalar-abs";
  }
  return "unknown";
}

std::vector<std::string> family_names() {
  return {"matching", "fp-matching", "emd", "semd", "edit", "fp-edit", "dtw", "fp-dtw"};
}

std::vector<std::string> ground_names() {
  return {"lcs", "lsp", "discrete", "scalar-abs"};
}

bool family_is_sequence_based(Family family) {
  switch (family) {
    case Family::kEdit:
    case Family::kFpEdit:
    case Family::kDtw:
    case Family::kFpDtw:
      return true;
    default:
      return false;
  }
}

bool family_rejects_empty(Family family) {
  switch (family) {
    case Family::kEmd:
    case Family::kSemd:
    case Family::kDtw:
    case Family::kFpDtw:
      return true;
    default:
      return false;
  }
}

void validate_config(const DistanceConfig& config) {
  const bool fixed_penalty = config.family == Family::kFpMatching ||
                             config.family == Family::kFpEdit ||
                             config.family == Family::kFpDtw;
  if (fixed_penalty) {
    if (!config.rho)
      throw ConfigError(std::string("family ") + to_string(config.family) +
                        " requires --rho");
    if (!(*config.rho > 0.0)) throw ConfigError("--rho must be positive");
  } else if (config.rho) {
    throw ConfigError("--rho only applies to the fixed-penalty families");
  }

  if (config.family == Family::kSemd) {
    if (!config.tau)
      throw ConfigError("family semd requires --tau");
    if (!(*config.tau > 0.0 && *config.tau < 1.0))
      throw ConfigError("--tau must lie strictly between 0 and 1");
  } else if (config.tau) {
    throw ConfigError("--tau only applies to family semd");
  }

  const bool reference_is_id = config.outer_reference.rfind("id:", 0) == 0 &&
                               config.outer_reference.size() > 3;
  if (config.outer_reference != "empty" && !reference_is_id)
    throw ConfigError("--outer-reference must be \"empty\" or \"id:<observation id>\"");
  if (config.steinhaus_outer && family_rejects_empty(config.family) &&
      config.outer_reference == "empty")
    throw ConfigError(std::string("family ") + to_string(config.family) +
                      " cannot be normalized around the empty observation; pass "
                      "--outer-reference id:<observation id>");
}

GroundMetric<LabeledPath> make_ground_metric(const DistanceConfig& config) {
  GroundMetric<LabeledPath> base = [&] {
    switch (config.ground) {
      case GroundKind::kLcs:
        return GroundMetric<LabeledPath>(
            [](const LabeledPath& a, const LabeledPath& b) {
              return static_cast<double>(lcs_distance(a, b));
            },
            LabeledPath{});
      case GroundKind::kLsp:
        return GroundMetric<LabeledPath>(
            [](const LabeledPath& a, const LabeledPath& b) {
              return static_cast<double>(lsp_distance(a, b));
            },
            LabeledPath{});
      case GroundKind::kDiscrete:
        return discrete_metric<LabeledPath>(LabeledPath{});
      case GroundKind::kScalarAbs:
        return GroundMetric<LabeledPath>(
            [](const LabeledPath& a, const LabeledPath& b) {
              return std::abs(parse_scalar_label(a) - parse_scalar_label(b));
            },
            LabeledPath{"0"});
    }
    throw ConfigError("unknown ground distance");
  }();
  if (config.steinhaus_ground) return steinhaus_transform(base);
  return base;
}

ObservationDistance make_base_observation_distance(const DistanceConfig& config) {
  validate_config(config);
  const GroundMetric<LabeledPath> ground = make_ground_metric(config);
  switch (config.family) {
    case Family::kMatching:
      return [ground](const std::vector<LabeledPath>& a, const std::vector<LabeledPath>& b) {
        return matching_distance(bag(a), bag(b), ground).value;
      };
    case Family::kFpMatching: {
      const double rho = *config.rho;
      return [ground, rho](const std::vector<LabeledPath>& a,
                           const std::vector<LabeledPath>& b) {
        return fixed_penalty_matching_distance(bag(a), bag(b), ground, rho).value;
      };
    }
    case Family::kEmd:
      return [ground](const std::vector<LabeledPath>& a, const std::vector<LabeledPath>& b) {
        return emd(bag(a), bag(b), ground).value;
      };
    case Family::kSemd: {
      const double tau = *config.tau;
      return [ground, tau](const std::vector<LabeledPath>& a,
                           const std::vector<LabeledPath>& b) {
        return semd(bag(a), bag(b), ground, tau);
      };
    }
    case Family::kEdit:
      return [ground](const std::vector<LabeledPath>& a, const std::vector<LabeledPath>& b) {
        return edit_distance(a, b, ground);
      };
    case Family::kFpEdit: {
      const double rho = *config.rho;
      return [ground, rho](const std::vector<LabeledPath>& a,
                           const std::vector<LabeledPath>& b) {
        return fixed_penalty_edit_distance(a, b, ground, rho);
      };
    }
    case Family::kDtw:
      return [ground](const std::vector<LabeledPath>& a, const std::vector<LabeledPath>& b) {
        return dtw_distance(a, b, ground);
      };
    case Family::kFpDtw: {
      const double rho = *config.rho;
      return [ground, rho](const std::vector<LabeledPath>& a,
                           const std::vector<LabeledPath>& b) {
        return fixed_penalty_dtw_distance(a, b, ground, rho);
      };
    }
  }
  throw ConfigError("unknown distance family");
}

std::vector<LabeledPath> resolve_outer_reference(const DistanceConfig& config,
                                                 const Corpus* corpus) {
  if (config.outer_reference == "empty") return {};
  const std::string id = config.outer_reference.substr(3);
  if (corpus == nullptr)
    throw ConfigError("an id: outer reference needs a corpus to resolve against");
  for (const Observation& obs : corpus->observations)
    if (obs.id == id) return obs.paths;
  throw ConfigError("outer reference observation not found in corpus: \"" + id + "\"");
}

ObservationDistance make_observation_distance(const DistanceConfig& config,
                                              const Corpus* corpus) {
  ObservationDistance base = make_base_observation_distance(config);
  if (!config.steinhaus_outer) return base;
  const std::vector<LabeledPath> reference = resolve_outer_reference(config, corpus);
  return [base, reference](const std::vector<LabeledPath>& a,
                           const std::vector<LabeledPath>& b) {
    return steinhaus_distance(base, reference, a, b);
  };
}

void validate_corpus_for_config(const Corpus& corpus, const DistanceConfig& config) {
  validate_config(config);
  const bool no_empty = family_rejects_empty(config.family);
  for (const Observation& obs : corpus.observations) {
    if (no_empty && obs.paths.empty())
      throw ConfigError("observation \"" + obs.id + "\" is empty, which family " +
                        to_string(config.family) + " cannot evaluate");
    if (config.ground == GroundKind::kScalarAbs) {
      for (const LabeledPath& path : obs.paths) {
        try {
          parse_scalar_label(path);
        } catch (const InvalidInputError& e) {
          throw ConfigError("observation \"" + obs.id + "\": " + e.what());
        }
      }
    }
  }
}

std::function<std::vector<LabeledPath>()> make_synthetic_sampler(
    const DistanceConfig& config, std::uint64_t seed) {
  validate_config(config);
  const bool no_empty = family_rejects_empty(config.family);
  const bool scalar = config.ground == GroundKind::kScalarAbs;
  auto rng = std::make_shared<std::mt19937_64>(seed);

  // Size weights lean small so that the degenerate shapes behind the known
  // counterexamples (repeated entries, proportional multisets) show up
  // often in a modest sample.
  auto sizes = no_empty ? std::discrete_distribution<int>{0, 35, 35, 20, 10}
                        : std::discrete_distribution<int>{10, 30, 30, 20, 10};

  return [rng, sizes, scalar]() mutable -> std::vector<LabeledPath> {
    std::vector<LabeledPath> obs;
    const int count = sizes(*rng);
    obs.reserve(static_cast<std::size_t>(count));
    std::uniform_int_distribution<int> digit(1, 4);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> extra_len(0, 2);
    std::bernoulli_distribution short_path(0.6);
    for (int k = 0; k < count; ++k) {
      if (scalar) {
        obs.push_back({std::to_string(digit(*rng))});
        continue;
      }
      LabeledPath path;
      if (short_path(*rng)) {
        path.push_back(letter(*rng) < 1 ? "a" : "b");
      } else {
        const int len = 1 + extra_len(*rng);
        for (int p = 0; p < len; ++p)
          path.push_back(std::string(1, static_cast<char>('a' + letter(*rng))));
      }
      obs.push_back(std::move(path));
    }
    return obs;
  };
}

}  // namespace colldist

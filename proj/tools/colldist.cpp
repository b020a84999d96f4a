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
// colldist: pairwise collection distances, embeddings and metric audits
// over corpora of labeled paths.
//
//   colldist dist  --input corpus.jsonl --output matrix.csv
//       --distance fp-matching --ground lcs --steinhaus-ground --rho 0.5
//   colldist embed --input corpus.jsonl --output run1 --dim 2 --workers 4
//   colldist audit --distance dtw --ground discrete --samples 10000

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colldist/audit.hpp"
#include "colldist/corpus.hpp"
#include "colldist/csv.hpp"
#include "colldist/distconfig.hpp"
#include "colldist/embed.hpp"
#include "colldist/errors.hpp"
#include "colldist/pairwise.hpp"

namespace {

using colldist::Corpus;
using colldist::DistanceConfig;
using colldist::LabeledPath;

constexpr std::uint64_t kDefaultSeed = 1729;

// The distance-selection flags shared by all three subcommands.
struct DistanceFlags {
  std::string family = "matching";
  std::string ground = "lcs";
  double rho = 0.0;
  double tau = 0.0;
  bool steinhaus_ground = false;
  bool steinhaus_outer = false;
  std::string outer_reference = "empty";
  CLI::Option* rho_option = nullptr;
  CLI::Option* tau_option = nullptr;

  void attach(CLI::App& cmd) {
    cmd.add_option("--distance", family,
                   "Distance family: matching, fp-matching, emd, semd, edit, "
                   "fp-edit, dtw, fp-dtw")
        ->capture_default_str();
    cmd.add_option("--ground", ground,
                   "Ground distance between paths: lcs, lsp, discrete, scalar-abs")
        ->capture_default_str();
    rho_option = cmd.add_option("--rho", rho, "Flat penalty for the fp-* families");
    tau_option = cmd.add_option("--tau", tau, "Blend weight in (0,1) for semd");
    cmd.add_flag("--steinhaus-ground", steinhaus_ground,
                 "Normalize the ground distance into [0,1]");
    cmd.add_flag("--steinhaus-outer", steinhaus_outer,
                 "Normalize the collection distance into [0,1]");
    cmd.add_option("--outer-reference", outer_reference,
                   "Reference for --steinhaus-outer: \"empty\" or \"id:<observation id>\"")
        ->capture_default_str();
  }

  DistanceConfig to_config() const {
    DistanceConfig config;
    config.family = colldist::family_from_string(family);
    config.ground = colldist::ground_from_string(ground);
    if (rho_option->count() > 0) config.rho = rho;
    if (tau_option->count() > 0) config.tau = tau;
    config.steinhaus_ground = steinhaus_ground;
    config.steinhaus_outer = steinhaus_outer;
    config.outer_reference = outer_reference;
    colldist::validate_config(config);
    return config;
  }
};

std::vector<std::string> corpus_ids(const Corpus& corpus) {
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& obs : corpus.observations) ids.push_back(obs.id);
  return ids;
}

std::string format_observation(const std::vector<LabeledPath>& obs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (i > 0) out << ", ";
    out << colldist::path_to_string(obs[i]);
  }
  out << ']';
  return out.str();
}

int run_dist(const std::string& input, const std::string& output,
             const DistanceConfig& config, std::size_t workers) {
  const Corpus corpus = colldist::load_corpus(input);
  const colldist::DistanceMatrix matrix =
      colldist::pairwise_matrix(corpus, config, workers);
  colldist::write_distance_matrix_csv(output, corpus_ids(corpus), matrix);
  std::cout << "wrote " << corpus.size() << "x" << corpus.size()
            << " distance matrix to " << output << "\n";
  return 0;
}

int run_embed(const std::string& input, const std::string& output_prefix,
              const DistanceConfig& config, std::size_t dim, std::size_t workers) {
  const Corpus corpus = colldist::load_corpus(input);
  const colldist::DistanceMatrix matrix =
      colldist::pairwise_matrix(corpus, config, workers);
  const colldist::Embedding embedding = colldist::classical_mds(matrix, dim);

  const std::string matrix_path = output_prefix + ".matrix.csv";
  const std::string coords_path = output_prefix + ".coords.csv";
  colldist::write_distance_matrix_csv(matrix_path, corpus_ids(corpus), matrix);
  colldist::write_coordinates_csv(coords_path, corpus, embedding);
  std::cout << "wrote " << matrix_path << " and " << coords_path << " ("
            << corpus.size() << " observations, dimension " << dim
            << ", stress " << colldist::format_double(embedding.stress) << ")\n";
  return 0;
}

int run_audit(const std::optional<std::string>& input, const DistanceConfig& config,
              std::size_t samples, std::uint64_t seed, double tolerance) {
  using Obs = std::vector<LabeledPath>;

  std::unique_ptr<Corpus> corpus;
  std::function<Obs()> sampler;
  if (input) {
    corpus = std::make_unique<Corpus>(colldist::load_corpus(*input));
    colldist::validate_corpus_for_config(*corpus, config);
    if (corpus->size() == 0)
      throw colldist::EmptyInputError("corpus has no observations to sample");
    auto rng = std::make_shared<std::mt19937_64>(seed);
    const Corpus* source = corpus.get();
    sampler = [rng, source]() {
      std::uniform_int_distribution<std::size_t> pick(0, source->size() - 1);
      return source->observations[pick(*rng)].paths;
    };
  } else {
    sampler = colldist::make_synthetic_sampler(config, seed);
  }

  // The multiset families ignore path order, so equality of sampled
  // observations must too.  Sorting each sample makes the identity check
  // compare canonical representatives; the distances are unaffected.
  if (!colldist::family_is_sequence_based(config.family)) {
    std::function<Obs()> raw = std::move(sampler);
    sampler = [raw]() {
      Obs obs = raw();
      std::sort(obs.begin(), obs.end());
      return obs;
    };
  }

  const colldist::ObservationDistance distance =
      colldist::make_observation_distance(config, corpus.get());
  const colldist::MetricAuditReport<Obs> report =
      colldist::audit_metric<Obs>(distance, sampler, samples, tolerance);

  std::cout << "distance=" << colldist::to_string(config.family)
            << " ground=" << colldist::to_string(config.ground)
            << (config.steinhaus_ground ? " steinhaus-ground" : "")
            << (config.steinhaus_outer ? " steinhaus-outer" : "") << " samples="
            << report.samples << " tolerance=" << report.tolerance << "\n";
  std::cout << "violations: total=" << report.violations.size()
            << " identity=" << report.count(colldist::Axiom::kIdentity)
            << " symmetry=" << report.count(colldist::Axiom::kSymmetry)
            << " triangle=" << report.count(colldist::Axiom::kTriangle) << "\n";

  constexpr std::size_t kMaxShown = 20;
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    if (i == kMaxShown) {
      std::cout << "  (" << (report.violations.size() - kMaxShown)
                << " more not shown)\n";
      break;
    }
    const auto& v = report.violations[i];
    std::cout << "  " << colldist::axiom_name(v.axiom) << ": lhs="
              << colldist::format_double(v.lhs) << " rhs="
              << colldist::format_double(v.rhs);
    const char* names[] = {" x=", " y=", " z="};
    for (std::size_t w = 0; w < v.witness.size() && w < 3; ++w)
      std::cout << names[w] << format_observation(v.witness[w]);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distances between collections of labeled paths: pairwise matrices, "
      "2-D embeddings and metric-axiom audits."};
  app.require_subcommand(1);

  std::string dist_input, dist_output;
  std::size_t dist_workers = 1;
  DistanceFlags dist_flags;
  CLI::App* dist_cmd =
      app.add_subcommand("dist", "Compute the pairwise distance matrix of a corpus");
  dist_cmd->add_option("--input", dist_input, "Corpus file, one JSON observation per line")
      ->required();
  dist_cmd->add_option("--output", dist_output, "Output CSV path")->required();
  dist_cmd->add_option("--workers", dist_workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dist_flags.attach(*dist_cmd);

  std::string embed_input, embed_output;
  std::size_t embed_workers = 1;
  std::size_t embed_dim = 2;
  DistanceFlags embed_flags;
  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "Distance matrix plus a classical MDS embedding of a corpus");
  embed_cmd->add_option("--input", embed_input, "Corpus file, one JSON observation per line")
      ->required();
  embed_cmd
      ->add_option("--output", embed_output,
                   "Output prefix; writes <prefix>.matrix.csv and <prefix>.coords.csv")
      ->required();
  embed_cmd->add_option("--dim", embed_dim, "Embedding dimension")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("--workers", embed_workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  embed_flags.attach(*embed_cmd);

  std::string audit_input;
  std::size_t audit_samples = 1000;
  std::uint64_t audit_seed = kDefaultSeed;
  double audit_tol = 1e-9;
  DistanceFlags audit_flags;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Sample random observation triples and check the metric axioms");
  CLI::Option* audit_input_opt = audit_cmd->add_option(
      "--input", audit_input, "Optional corpus to sample from (default: synthetic)");
  audit_cmd->add_option("--samples", audit_samples, "Number of sampled triples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--seed", audit_seed, "Sampler seed")->capture_default_str();
  audit_cmd->add_option("--tol", audit_tol, "Axiom tolerance")->capture_default_str();
  audit_flags.attach(*audit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (dist_cmd->parsed())
      return run_dist(dist_input, dist_output, dist_flags.to_config(), dist_workers);
    if (embed_cmd->parsed())
      return run_embed(embed_input, embed_output, embed_flags.to_config(), embed_dim,
                       embed_workers);
    if (audit_cmd->parsed()) {
      std::optional<std::string> input;
      if (audit_input_opt->count() > 0) input = audit_input;
      return run_audit(input, audit_flags.to_config(), audit_samples, audit_seed,
                       audit_tol);
    }
  } catch (const colldist::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const colldist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

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

// Exercises the installed command-line binary end to end through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "colldist/csv.hpp"
#include "colldist/corpus.hpp"
#include "colldist/distconfig.hpp"
#include "colldist/pairwise.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("colldist-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

RunResult run_cli(const TempDir& dir, const std::string& args) {
  const std::string capture = dir.file("capture.txt");
  const std::string command =
      std::string("\"") + COLLDIST_CLI_PATH + "\" " + args + " > \"" + capture +
      "\" 2>&1";
  const int status = std::system(command.c_str());

  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::ostringstream text;
  text << in.rdbuf();
  result.output = text.str();
  return result;
}

std::string write_demo_corpus(const TempDir& dir) {
  const std::string path = dir.file("corpus.jsonl");
  std::ofstream out(path);
  out << R"({"id": "a-1", "paths": [["home"],["home","search"]], "meta": {"regime": "a"}})" << "\n"
      << R"({"id": "a-2", "paths": [["home","search"],["home"]], "meta": {"regime": "a"}})" << "\n"
      << R"({"id": "b-1", "paths": [["blog"],["blog","post"]], "meta": {"regime": "b"}})" << "\n"
      << R"({"id": "b-2", "paths": [["blog","post","post"]], "meta": {"regime": "b"}})" << "\n";
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dist writes the same matrix the library computes") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);
  const std::string matrix_path = dir.file("matrix.csv");

  const RunResult result = run_cli(
      dir, "dist --input \"" + corpus_path + "\" --output \"" + matrix_path +
               "\" --distance matching --ground lcs --workers 2");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "4x4"));

  const auto [ids, matrix] = colldist::read_distance_matrix_csv(matrix_path);
  CHECK(ids == std::vector<std::string>{"a-1", "a-2", "b-1", "b-2"});

  const colldist::Corpus corpus = colldist::load_corpus(corpus_path);
  colldist::DistanceConfig config;
  config.family = colldist::Family::kMatching;
  config.ground = colldist::GroundKind::kLcs;
  CHECK(matrix == colldist::pairwise_matrix(corpus, config));
}

TEST_CASE("dist accepts the normalized fixed-penalty configuration") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);
  const std::string matrix_path = dir.file("normalized.csv");

  const RunResult result = run_cli(
      dir, "dist --input \"" + corpus_path + "\" --output \"" + matrix_path +
               "\" --distance fp-matching --ground lcs --rho 0.5 "
               "--steinhaus-ground --steinhaus-outer");
  CHECK(result.exit_code == 0);

  const auto [ids, matrix] = colldist::read_distance_matrix_csv(matrix_path);
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      CHECK(matrix(i, j) >= 0.0);
      CHECK(matrix(i, j) <= 1.0);
    }
}

TEST_CASE("embed writes the matrix and the coordinates") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);
  const std::string prefix = dir.file("run");

  const RunResult result = run_cli(
      dir, "embed --input \"" + corpus_path + "\" --output \"" + prefix +
               "\" --dim 2 --workers 2");
  CHECK(result.exit_code == 0);
  CHECK(std::filesystem::exists(prefix + ".matrix.csv"));
  CHECK(std::filesystem::exists(prefix + ".coords.csv"));

  std::ifstream coords(prefix + ".coords.csv");
  std::string header;
  REQUIRE(std::getline(coords, header));
  CHECK(contains(header, "id,x1,x2"));
  CHECK(contains(header, "regime"));
  std::size_t data_rows = 0;
  std::string line;
  while (std::getline(coords, line))
    if (!line.empty()) ++data_rows;
  CHECK(data_rows == 4);
}

TEST_CASE("audit reports a clean bill for a true metric") {
  TempDir dir;
  const RunResult result = run_cli(
      dir, "audit --distance matching --ground lcs --samples 300 --seed 7");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "violations: total=0 "));
}

TEST_CASE("audit surfaces violations without failing") {
  TempDir dir;
  const RunResult result = run_cli(
      dir, "audit --distance dtw --ground lcs --samples 2000 --seed 7");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "violations: total="));
  CHECK_FALSE(contains(result.output, "violations: total=0 "));
}

TEST_CASE("audit can sample a corpus") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);
  const RunResult result = run_cli(
      dir, "audit --input \"" + corpus_path +
               "\" --distance matching --ground lcs --samples 200");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "violations: total=0 "));
}

TEST_CASE("validation problems exit with status 1") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);
  const std::string out = dir.file("never.csv");
  const std::string base =
      "dist --input \"" + corpus_path + "\" --output \"" + out + "\" ";

  CHECK(run_cli(dir, base + "--distance bogus").exit_code == 1);
  CHECK(run_cli(dir, base + "--distance fp-matching").exit_code == 1);
  CHECK(run_cli(dir, base + "--distance emd --steinhaus-outer").exit_code == 1);
  CHECK(run_cli(dir, base + "--workers 0").exit_code == 1);

  // Usage errors from the argument parser.
  CHECK(run_cli(dir, "dist --input \"" + corpus_path + "\"").exit_code == 1);
  CHECK(run_cli(dir, "").exit_code == 1);
  CHECK(run_cli(dir, "dist --no-such-flag").exit_code == 1);

  // A corpus that does not parse.
  const std::string broken = dir.file("broken.jsonl");
  std::ofstream(broken) << "{not json\n";
  const RunResult parse_failure = run_cli(
      dir, "dist --input \"" + broken + "\" --output \"" + out + "\"");
  CHECK(parse_failure.exit_code == 1);
  CHECK(contains(parse_failure.output, "broken.jsonl:1:"));
}

TEST_CASE("io problems exit with status 2") {
  TempDir dir;
  const std::string corpus_path = write_demo_corpus(dir);

  const RunResult missing = run_cli(
      dir, "dist --input \"" + dir.file("absent.jsonl") + "\" --output \"" +
               dir.file("m.csv") + "\"");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "error:"));

  const RunResult unwritable = run_cli(
      dir, "dist --input \"" + corpus_path + "\" --output \"" +
               dir.file("no-such-dir/m.csv") + "\"");
  CHECK(unwritable.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  TempDir dir;
  const RunResult help = run_cli(dir, "--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.output, "dist"));
  CHECK(contains(help.output, "embed"));
  CHECK(contains(help.output, "audit"));
}

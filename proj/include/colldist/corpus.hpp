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

#ifndef COLLDIST_CORPUS_HPP
#define COLLDIST_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "colldist/element.hpp"

namespace colldist {

// One observed collection: an ordered list of labeled paths plus free-form
// metadata.  Order-sensitive distances read `paths` as a sequence; the
// multiset distances bag it.
struct Observation {
  std::string id;
  std::vector<LabeledPath> paths;
  std::map<std::string, std::string> meta;
};

struct Corpus {
  std::vector<Observation> observations;

  std::size_t size() const { return observations.size(); }
};

// Corpus files hold one observation per line as a JSON record:
//
//   {"id": "obs-1", "paths": [["a","b"],["c"]], "meta": {"regime": "x"}}
//
// `meta` is optional.  Ids must be unique, labels non-empty strings.  Blank
// lines are permitted and skipped.  Errors carry the offending line number.
Corpus parse_corpus(std::istream& in, const std::string& source_name);

// Reads the file at `path` through parse_corpus.  Unreadable file -> IoError.
Corpus load_corpus(const std::string& path);

// Serializes one observation back into its corpus line format.
std::string observation_to_json_line(const Observation& obs);

}  // namespace colldist

#endif  // COLLDIST_CORPUS_HPP

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

#ifndef COLLDIST_CSV_HPP
#define COLLDIST_CSV_HPP

#include <string>
#include <utility>
#include <vector>

#include "colldist/corpus.hpp"
#include "colldist/embed.hpp"
#include "colldist/matrix.hpp"

namespace colldist {

// Decimal serialization with 17 significant digits: enough to round-trip
// any double exactly through parse_double.
std::string format_double(double value);
double parse_double(const std::string& text);

// Distance matrix as CSV with an id header row and id-leading rows:
//
//   id,obs-1,obs-2
//   obs-1,0,1.5
//   obs-2,1.5,0
void write_distance_matrix_csv(const std::string& path,
                               const std::vector<std::string>& ids,
                               const DistanceMatrix& matrix);

// Reads the format above back; values round-trip bit for bit.
std::pair<std::vector<std::string>, DistanceMatrix> read_distance_matrix_csv(
    const std::string& path);

// Embedding coordinates as CSV: one row per observation with its id, the
// coordinate columns x1..xm, and one column per metadata key present
// anywhere in the corpus (sorted by key; missing values empty).
void write_coordinates_csv(const std::string& path, const Corpus& corpus,
                           const Embedding& embedding);

}  // namespace colldist

#endif  // COLLDIST_CSV_HPP

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

#ifndef COLLDIST_ELEMENT_HPP
#define COLLDIST_ELEMENT_HPP

#include <string>
#include <vector>

namespace colldist {

// The element types the command-line tool and the bundled ground distances
// work with.  The algorithms themselves are templates over any regular,
// ordered value type; these aliases are just the concrete instantiations
// used throughout the tests and the CLI.
using Label = std::string;
using LabeledPath = std::vector<Label>;
using Scalar = double;
using Symbol = std::string;

// Renders a labeled path as "a>b>c" for error messages and audit witnesses.
// The empty path renders as "()".
inline std::string path_to_string(const LabeledPath& path) {
  if (path.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '>';
    out += path[i];
  }
  return out;
}

}  // namespace colldist

#endif  // COLLDIST_ELEMENT_HPP

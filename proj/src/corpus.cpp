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

#include "colldist/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "colldist/errors.hpp"

namespace colldist {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

Observation parse_observation(const json& record, const std::string& source,
                              std::size_t line) {
  if (!record.is_object()) fail(source, line, "observation must be a JSON object");

  Observation obs;
  if (!record.contains("id") || !record["id"].is_string())
    fail(source, line, "observation needs a string \"id\"");
  obs.id = record["id"].get<std::string>();
  if (obs.id.empty()) fail(source, line, "observation id must be non-empty");

  if (!record.contains("paths") || !record["paths"].is_array())
    fail(source, line, "observation needs a \"paths\" array");
  for (const json& path : record["paths"]) {
    if (!path.is_array()) fail(source, line, "each path must be an array of labels");
    LabeledPath parsed;
    parsed.reserve(path.size());
    for (const json& label : path) {
      if (!label.is_string()) fail(source, line, "path labels must be strings");
      std::string value = label.get<std::string>();
      if (value.empty()) fail(source, line, "path labels must be non-empty");
      parsed.push_back(std::move(value));
    }
    obs.paths.push_back(std::move(parsed));
  }

  if (record.contains("meta")) {
    if (!record["meta"].is_object())
      fail(source, line, "\"meta\" must be an object of string values");
    for (const auto& [key, value] : record["meta"].items()) {
      if (!value.is_string())
        fail(source, line, "\"meta\" values must be strings");
      obs.meta[key] = value.get<std::string>();
    }
  }

  for (const auto& [key, value] : record.items()) {
    (void)value;
    if (key != "id" && key != "paths" && key != "meta")
      fail(source, line, "unknown observation field \"" + key + "\"");
  }
  return obs;
}

}  // namespace

Corpus parse_corpus(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(source_name, line_no, std::string("invalid JSON: ") + e.what());
    }
    Observation obs = parse_observation(record, source_name, line_no);
    if (!seen_ids.insert(obs.id).second)
      fail(source_name, line_no, "duplicate observation id \"" + obs.id + "\"");
    corpus.observations.push_back(std::move(obs));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  return parse_corpus(in, path);
}

std::string observation_to_json_line(const Observation& obs) {
  json record;
  record["id"] = obs.id;
  record["paths"] = json::array();
  for (const LabeledPath& path : obs.paths) record["paths"].push_back(path);
  if (!obs.meta.empty()) record["meta"] = obs.meta;
  return record.dump();
}

}  // namespace colldist

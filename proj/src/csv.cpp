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

#include "colldist/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "colldist/errors.hpp"

namespace colldist {

namespace {

std::string quote_csv(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one CSV line honoring quoted fields with doubled-quote escapes.
std::vector<std::string> split_csv_line(const std::string& line,
                                        const std::string& source,
                                        std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c == '\r' && i + 1 == line.size()) {
      // Tolerate CRLF endings.
    } else {
      current += c;
    }
  }
  if (in_quotes)
    throw ParseError(source + ":" + std::to_string(line_no) +
                     ": unterminated quoted field");
  fields.push_back(current);
  return fields;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ParseError("not a number: \"" + text + "\"");
  return value;
}

void write_distance_matrix_csv(const std::string& path,
                               const std::vector<std::string>& ids,
                               const DistanceMatrix& matrix) {
  if (matrix.rows() != ids.size() || matrix.cols() != ids.size())
    throw InvalidInputError("matrix shape must match the id list");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);

  out << "id";
  for (const std::string& id : ids) out << ',' << quote_csv(id);
  out << '\n';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << quote_csv(ids[i]);
    for (std::size_t j = 0; j < ids.size(); ++j)
      out << ',' << format_double(matrix(i, j));
    out << '\n';
  }
  if (!out.flush()) throw IoError("failed writing: " + path);
}

std::pair<std::vector<std::string>, DistanceMatrix> read_distance_matrix_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);

  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path + ":1: empty matrix file");
  const std::vector<std::string> header = split_csv_line(line, path, 1);
  if (header.empty() || header[0] != "id")
    throw ParseError(path + ":1: header must start with \"id\"");
  std::vector<std::string> ids(header.begin() + 1, header.end());

  DistanceMatrix matrix(ids.size(), ids.size(), 0.0);
  std::size_t row = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (row >= ids.size())
      throw ParseError(path + ":" + std::to_string(line_no) + ": more rows than ids");
    const std::vector<std::string> fields = split_csv_line(line, path, line_no);
    if (fields.size() != ids.size() + 1)
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(ids.size() + 1) + " fields, got " +
                       std::to_string(fields.size()));
    if (fields[0] != ids[row])
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": row id does not match header order");
    for (std::size_t j = 0; j < ids.size(); ++j) {
      try {
        matrix(row, j) = parse_double(fields[j + 1]);
      } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    ++row;
  }
  if (row != ids.size())
    throw ParseError(path + ": expected " + std::to_string(ids.size()) +
                     " data rows, got " + std::to_string(row));
  return {std::move(ids), std::move(matrix)};
}

void write_coordinates_csv(const std::string& path, const Corpus& corpus,
                           const Embedding& embedding) {
  if (embedding.points() != corpus.size())
    throw InvalidInputError("embedding must have one row per observation");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);

  std::set<std::string> meta_keys;
  for (const Observation& obs : corpus.observations)
    for (const auto& [key, value] : obs.meta) {
      (void)value;
      meta_keys.insert(key);
    }

  out << "id";
  for (std::size_t k = 0; k < embedding.dimension(); ++k)
    out << ",x" << (k + 1);
  for (const std::string& key : meta_keys) out << ',' << quote_csv(key);
  out << '\n';

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Observation& obs = corpus.observations[i];
    out << quote_csv(obs.id);
    for (std::size_t k = 0; k < embedding.dimension(); ++k)
      out << ',' << format_double(embedding.coords(i, k));
    for (const std::string& key : meta_keys) {
      const auto it = obs.meta.find(key);
      out << ',' << quote_csv(it == obs.meta.end() ? std::string() : it->second);
    }
    out << '\n';
  }
  if (!out.flush()) throw IoError("failed writing: " + path);
}

}  // namespace colldist

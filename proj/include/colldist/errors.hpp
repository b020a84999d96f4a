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

#ifndef COLLDIST_ERRORS_HPP
#define COLLDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colldist {

// Base class for every error thrown by the library.  Catching this is enough
// to separate library failures from genuine logic bugs (std::logic_error et
// al. still indicate a broken caller or a broken library).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed numerical input: NaN costs, negative masses, out-of-range
// matching indices, shape mismatches.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A distance configuration that cannot be evaluated: missing null element,
// missing or non-positive penalty, weight outside its range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a non-empty collection received an empty one.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Transport marginals that cannot be balanced within tolerance.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A brute-force helper was asked for more work than its guard allows.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

// Corpus or matrix files that cannot be parsed.  Carries enough position
// information to point at the offending line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failures: unreadable input, unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace colldist

#endif  // COLLDIST_ERRORS_HPP

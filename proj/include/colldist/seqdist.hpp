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
// Distances between sequences over a common ground metric.
//
//   edit_distance                 best monotone matching; unmatched entries
//                                 charged their distance to the null element
//   fixed_penalty_edit_distance   same with a flat penalty rho per
//                                 unmatched entry
//   dtw_distance                  best coupling (every entry paired, repeats
//                                 allowed); a pseudometric only
//   fixed_penalty_dtw_distance    dtw plus rho per warped step, which
//                                 restores identity of indiscernibles
//   lcs_distance / lsp_distance   integer path distances derived from the
//                                 longest common subsequence / subpath
//
// Every dynamic program comes in two builds: the full (N+1)x(M+1) matrix,
// and a light-memory variant holding only the previous and current row.  The
// two are kept textually identical in their update expressions so their
// results agree bit for bit.

#ifndef COLLDIST_SEQDIST_HPP
#define COLLDIST_SEQDIST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "colldist/errors.hpp"
#include "colldist/ground.hpp"
#include "colldist/matrix.hpp"

namespace colldist {

template <typename T>
using Sequence = std::vector<T>;

// A pairing of sequence positions that respects order: both coordinate lists
// are strictly increasing.  Indices are zero-based.
struct MonotoneMatching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// A coupling walks both sequences from the first entries to the last,
// advancing one or both positions by one at each step.  Every position of
// both sequences is visited; positions may repeat.  Indices are zero-based.
struct Coupling {
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

inline void validate_coupling(const Coupling& c, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0)
    throw EmptyInputError("couplings are undefined for empty sequences");
  if (c.steps.empty() || c.steps.front() != std::pair<std::size_t, std::size_t>{0, 0})
    throw InvalidInputError("coupling must start at the first pair of entries");
  if (c.steps.back() != std::pair<std::size_t, std::size_t>{n - 1, m - 1})
    throw InvalidInputError("coupling must end at the last pair of entries");
  for (std::size_t r = 1; r < c.steps.size(); ++r) {
    const auto& [pi, pj] = c.steps[r - 1];
    const auto& [i, j] = c.steps[r];
    const bool ok = (i == pi + 1 && j == pj) || (i == pi && j == pj + 1) ||
                    (i == pi + 1 && j == pj + 1);
    if (!ok) throw InvalidInputError("coupling step must advance one or both positions by one");
  }
}

// Number of warped steps in a coupling: the steps (i,j) such that (i,j+1) or
// (i+1,j) also belongs to the coupling.  Zero exactly when the coupling is
// the strict diagonal.  Evaluated literally as a set-membership count so it
// can serve as an oracle for the penalty bookkeeping inside the DP.
inline std::size_t warp_count(const Coupling& c) {
  const std::set<std::pair<std::size_t, std::size_t>> steps(c.steps.begin(),
                                                            c.steps.end());
  std::size_t w = 0;
  for (const auto& [i, j] : steps) {
    if (steps.count({i, j + 1}) || steps.count({i + 1, j})) ++w;
  }
  return w;
}

// Minimum over monotone matchings of the paired distances plus the distance
// to the null element for every unmatched entry.
template <typename T>
double edit_distance(const Sequence<T>& x, const Sequence<T>& y,
                     const GroundMetric<T>& ground) {
  if (!ground.has_null_element())
    throw ConfigError("edit distance requires a ground metric with a null element");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  Matrix c(n + 1, m + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i)
    c(i, 0) = c(i - 1, 0) + ground.null_distance(x[i - 1]);
  for (std::size_t j = 1; j <= m; ++j)
    c(0, j) = c(0, j - 1) + ground.null_distance(y[j - 1]);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double pair_both = c(i - 1, j - 1) + ground(x[i - 1], y[j - 1]);
      const double drop_x = c(i - 1, j) + ground.null_distance(x[i - 1]);
      const double drop_y = c(i, j - 1) + ground.null_distance(y[j - 1]);
      c(i, j) = std::min({pair_both, drop_x, drop_y});
    }
  }
  return c(n, m);
}

template <typename T>
double edit_distance_light(const Sequence<T>& x, const Sequence<T>& y,
                           const GroundMetric<T>& ground) {
  if (!ground.has_null_element())
    throw ConfigError("edit distance requires a ground metric with a null element");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<double> prev(m + 1, 0.0), curr(m + 1, 0.0);
  for (std::size_t j = 1; j <= m; ++j)
    prev[j] = prev[j - 1] + ground.null_distance(y[j - 1]);
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = prev[0] + ground.null_distance(x[i - 1]);
    for (std::size_t j = 1; j <= m; ++j) {
      const double pair_both = prev[j - 1] + ground(x[i - 1], y[j - 1]);
      const double drop_x = prev[j] + ground.null_distance(x[i - 1]);
      const double drop_y = curr[j - 1] + ground.null_distance(y[j - 1]);
      curr[j] = std::min({pair_both, drop_x, drop_y});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

// Minimum over monotone matchings of the paired distances plus rho per
// unmatched entry on either side.
template <typename T>
double fixed_penalty_edit_distance(const Sequence<T>& x, const Sequence<T>& y,
                                   const GroundMetric<T>& ground, double rho) {
  if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  Matrix c(n + 1, m + 1, 0.0);
  for (std::size_t i = 1; i <= n; ++i) c(i, 0) = rho * static_cast<double>(i);
  for (std::size_t j = 1; j <= m; ++j) c(0, j) = rho * static_cast<double>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double pair_both = c(i - 1, j - 1) + ground(x[i - 1], y[j - 1]);
      const double drop_x = c(i - 1, j) + rho;
      const double drop_y = c(i, j - 1) + rho;
      c(i, j) = std::min({pair_both, drop_x, drop_y});
    }
  }
  return c(n, m);
}

template <typename T>
double fixed_penalty_edit_distance_light(const Sequence<T>& x, const Sequence<T>& y,
                                         const GroundMetric<T>& ground, double rho) {
  if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<double> prev(m + 1, 0.0), curr(m + 1, 0.0);
  for (std::size_t j = 1; j <= m; ++j) prev[j] = rho * static_cast<double>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = rho * static_cast<double>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const double pair_both = prev[j - 1] + ground(x[i - 1], y[j - 1]);
      const double drop_x = prev[j] + rho;
      const double drop_y = curr[j - 1] + rho;
      curr[j] = std::min({pair_both, drop_x, drop_y});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

// Minimum over couplings of the summed pairwise distances.  Symmetric but
// only a pseudometric: repeating an entry costs nothing, and the triangle
// inequality can fail through a shorter middle sequence.
template <typename T>
double dtw_distance(const Sequence<T>& x, const Sequence<T>& y,
                    const GroundMetric<T>& ground) {
  if (x.empty() || y.empty())
    throw EmptyInputError("time warping requires non-empty sequences");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Matrix c(n + 1, m + 1, kInf);
  c(0, 0) = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      c(i, j) = std::min({c(i - 1, j - 1), c(i - 1, j), c(i, j - 1)}) +
                ground(x[i - 1], y[j - 1]);
    }
  }
  return c(n, m);
}

template <typename T>
double dtw_distance_light(const Sequence<T>& x, const Sequence<T>& y,
                          const GroundMetric<T>& ground) {
  if (x.empty() || y.empty())
    throw EmptyInputError("time warping requires non-empty sequences");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(m + 1, kInf), curr(m + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = kInf;
    for (std::size_t j = 1; j <= m; ++j) {
      curr[j] = std::min({prev[j - 1], prev[j], curr[j - 1]}) +
                ground(x[i - 1], y[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

// Minimum over couplings of the summed distances plus rho per warped step.
// The penalty restores identity of indiscernibles; the triangle inequality
// still fails in general.
template <typename T>
double fixed_penalty_dtw_distance(const Sequence<T>& x, const Sequence<T>& y,
                                  const GroundMetric<T>& ground, double rho) {
  if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
  if (x.empty() || y.empty())
    throw EmptyInputError("time warping requires non-empty sequences");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Matrix c(n + 1, m + 1, kInf);
  c(0, 0) = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double d = ground(x[i - 1], y[j - 1]);
      const double diag = c(i - 1, j - 1) + d;
      const double warp_x = c(i - 1, j) + d + rho;
      const double warp_y = c(i, j - 1) + d + rho;
      c(i, j) = std::min({diag, warp_x, warp_y});
    }
  }
  return c(n, m);
}

template <typename T>
double fixed_penalty_dtw_distance_light(const Sequence<T>& x, const Sequence<T>& y,
                                        const GroundMetric<T>& ground, double rho) {
  if (!(rho > 0.0)) throw ConfigError("fixed penalty must be positive");
  if (x.empty() || y.empty())
    throw EmptyInputError("time warping requires non-empty sequences");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(m + 1, kInf), curr(m + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = kInf;
    for (std::size_t j = 1; j <= m; ++j) {
      const double d = ground(x[i - 1], y[j - 1]);
      const double diag = prev[j - 1] + d;
      const double warp_x = prev[j] + d + rho;
      const double warp_y = curr[j - 1] + d + rho;
      curr[j] = std::min({diag, warp_x, warp_y});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

namespace detail {

// 0 when equal, 2 otherwise.  With a flat penalty of 1, substituting a
// mismatched pair (cost 2) never beats dropping both entries (cost 2) and
// never loses to it, so the fixed-penalty edit distance under this ground
// counts n + m - 2 * (longest common subsequence).
template <typename T>
GroundMetric<T> mismatch_ground() {
  return GroundMetric<T>([](const T& a, const T& b) { return a == b ? 0.0 : 2.0; },
                         std::nullopt, 2.0);
}

}  // namespace detail

// Longest-common-subsequence distance: n + m minus twice the length of the
// longest subsequence common to both sequences.
template <typename T>
long long lcs_distance(const Sequence<T>& x, const Sequence<T>& y) {
  return std::llround(
      fixed_penalty_edit_distance(x, y, detail::mismatch_ground<T>(), 1.0));
}

template <typename T>
long long lcs_distance_light(const Sequence<T>& x, const Sequence<T>& y) {
  return std::llround(
      fixed_penalty_edit_distance_light(x, y, detail::mismatch_ground<T>(), 1.0));
}

// Longest-common-subpath distance: n + m minus twice the length of the
// longest contiguous run common to both sequences.  The run-length matrix
// q(i, j) counts the common suffix ending at (x_i, y_j); the answer tracks
// its running maximum.
template <typename T>
long long lsp_distance(const Sequence<T>& x, const Sequence<T>& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<std::vector<long long>> q(n + 1, std::vector<long long>(m + 1, 0));
  long long best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      q[i][j] = x[i - 1] == y[j - 1] ? q[i - 1][j - 1] + 1 : 0;
      best = std::max(best, q[i][j]);
    }
  }
  return static_cast<long long>(n) + static_cast<long long>(m) - 2 * best;
}

template <typename T>
long long lsp_distance_light(const Sequence<T>& x, const Sequence<T>& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<long long> prev(m + 1, 0), curr(m + 1, 0);
  long long best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      curr[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, curr[j]);
    }
    std::swap(prev, curr);
  }
  return static_cast<long long>(n) + static_cast<long long>(m) - 2 * best;
}

}  // namespace colldist

#endif  // COLLDIST_SEQDIST_HPP

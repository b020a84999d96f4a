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

#ifndef COLLDIST_GROUND_HPP
#define COLLDIST_GROUND_HPP

#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <utility>

#include "colldist/element.hpp"
#include "colldist/errors.hpp"

namespace colldist {

// A metric on element values, together with the two optional pieces of
// context the collection distances need: a designated null element (the
// reference that unmatched elements are charged against) and, when known, a
// finite upper bound on the distance between any two elements that can occur.
//
// The distance function itself is assumed to satisfy the metric axioms; the
// audit helpers in audit.hpp exist to check that assumption empirically.
template <typename T>
class GroundMetric {
 public:
  using DistanceFn = std::function<double(const T&, const T&)>;

  GroundMetric(DistanceFn distance, std::optional<T> null_element = std::nullopt,
               std::optional<double> upper_bound = std::nullopt)
      : distance_(std::move(distance)),
        null_element_(std::move(null_element)),
        upper_bound_(upper_bound) {
    if (!distance_) throw ConfigError("ground metric requires a distance function");
    if (upper_bound_ && !(*upper_bound_ >= 0.0))
      throw ConfigError("ground metric upper bound must be non-negative");
  }

  double operator()(const T& x, const T& y) const { return distance_(x, y); }

  bool has_null_element() const { return null_element_.has_value(); }

  const T& null_element() const {
    if (!null_element_)
      throw ConfigError("ground metric has no null element configured");
    return *null_element_;
  }

  // Distance from a value to the null element; the per-element penalty that
  // leaving the value unmatched incurs.
  double null_distance(const T& x) const { return distance_(x, null_element()); }

  bool has_upper_bound() const { return upper_bound_.has_value(); }

  double upper_bound() const {
    if (!upper_bound_)
      throw ConfigError("ground metric has no upper bound configured");
    return *upper_bound_;
  }

 private:
  DistanceFn distance_;
  std::optional<T> null_element_;
  std::optional<double> upper_bound_;
};

// Normalizes an arbitrary distance into [0, 1] relative to a reference point:
//
//   transformed(x, y) = 2 d(x, y) / (d(x, c) + d(y, c) + d(x, y))
//
// with the convention that a zero denominator (x = y = c) yields 0.  The
// transform of a metric is again a metric, and it is bounded by 1.
template <typename T, typename Dist>
double steinhaus_distance(const Dist& distance, const T& reference, const T& x,
                          const T& y) {
  const double dxy = distance(x, y);
  const double denom = distance(x, reference) + distance(y, reference) + dxy;
  if (denom == 0.0) return 0.0;
  return 2.0 * dxy / denom;
}

// Wraps a ground metric in the normalization above, using the metric's null
// element as the reference point.  The result keeps the same null element
// (the reference is at distance 0 from itself, so null penalties stay
// meaningful) and gains the upper bound 1.
template <typename T>
GroundMetric<T> steinhaus_transform(const GroundMetric<T>& base) {
  const T reference = base.null_element();
  auto transformed = [base, reference](const T& x, const T& y) {
    return steinhaus_distance<T>(base, reference, x, y);
  };
  return GroundMetric<T>(transformed, reference, 1.0);
}

// Same normalization around an explicitly chosen reference point.
template <typename T>
GroundMetric<T> steinhaus_transform(const GroundMetric<T>& base, const T& reference) {
  auto transformed = [base, reference](const T& x, const T& y) {
    return steinhaus_distance<T>(base, reference, x, y);
  };
  std::optional<T> null_element;
  if (base.has_null_element()) null_element = base.null_element();
  return GroundMetric<T>(std::move(transformed), std::move(null_element), 1.0);
}

// Promotes a plain callable to a GroundMetric.  Convenience for tests and
// callers that build grounds ad hoc.
template <typename T, typename Dist>
GroundMetric<T> lift_to_ground(Dist&& distance, std::optional<T> null_element = std::nullopt,
                               std::optional<double> upper_bound = std::nullopt) {
  return GroundMetric<T>(typename GroundMetric<T>::DistanceFn(std::forward<Dist>(distance)),
                         std::move(null_element), upper_bound);
}

// |x - y| on the real line with 0 as the null element.
inline GroundMetric<double> absolute_difference_metric() {
  return GroundMetric<double>(
      [](const double& x, const double& y) { return std::abs(x - y); }, 0.0);
}

// The 0/1 metric on any equality-comparable type.
template <typename T>
GroundMetric<T> discrete_metric(std::optional<T> null_element = std::nullopt) {
  return GroundMetric<T>(
      [](const T& x, const T& y) { return x == y ? 0.0 : 1.0; },
      std::move(null_element), 1.0);
}

}  // namespace colldist

#endif  // COLLDIST_GROUND_HPP

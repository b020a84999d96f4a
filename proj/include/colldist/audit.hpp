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

#ifndef COLLDIST_AUDIT_HPP
#define COLLDIST_AUDIT_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "colldist/errors.hpp"

namespace colldist {

// Which metric axiom a recorded witness violates.
enum class Axiom {
  kIdentity,   // d(x, x) != 0, or d(x, y) = 0 with x != y
  kSymmetry,   // d(x, y) != d(y, x)
  kTriangle,   // d(x, y) > d(x, z) + d(z, y)
};

inline const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kIdentity: return "identity";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kTriangle: return "triangle";
  }
  return "unknown";
}

// One concrete counterexample.  `witness` holds the points involved: one
// point for a d(x,x) != 0 failure, two for indiscernibility and symmetry,
// three (x, y, z) for a triangle failure.  `lhs` and `rhs` are the two sides
// of the violated comparison, so the finding can be re-checked later.
template <typename O>
struct AuditViolation {
  Axiom axiom;
  std::vector<O> witness;
  double lhs = 0.0;
  double rhs = 0.0;
};

template <typename O>
struct MetricAuditReport {
  std::size_t samples = 0;  // number of (x, y, z) triples examined
  double tolerance = 0.0;
  std::vector<AuditViolation<O>> violations;

  bool clean() const { return violations.empty(); }

  std::size_t count(Axiom axiom) const {
    std::size_t n = 0;
    for (const auto& v : violations)
      if (v.axiom == axiom) ++n;
    return n;
  }
};

namespace detail {

// Runs the axiom checks on one triple and appends any violations found.
// Identity is checked both ways: d(x,x) must vanish, and a vanishing d(x,y)
// must mean x == y.
template <typename O, typename Dist>
void audit_triple(const Dist& distance, const O& x, const O& y, const O& z,
                  double tol, std::vector<AuditViolation<O>>& out) {
  const double dxx = distance(x, x);
  if (!(std::abs(dxx) <= tol))
    out.push_back({Axiom::kIdentity, {x}, dxx, 0.0});

  const double dxy = distance(x, y);
  const double dyx = distance(y, x);
  if (!(std::abs(dxy - dyx) <= tol))
    out.push_back({Axiom::kSymmetry, {x, y}, dxy, dyx});
  if (std::abs(dxy) <= tol && !(x == y))
    out.push_back({Axiom::kIdentity, {x, y}, dxy, 0.0});

  const double dxz = distance(x, z);
  const double dzy = distance(z, y);
  if (!(dxy <= dxz + dzy + tol))
    out.push_back({Axiom::kTriangle, {x, y, z}, dxy, dxz + dzy});
}

}  // namespace detail

// Samples `n` triples from `sample` and records every axiom violation it can
// find, up to the additive tolerance.  The sampler is any callable returning
// a fresh point per call; determinism is the caller's business (seed the
// sampler).  The distance must be a pure function for the witnesses to stay
// reproducible.
template <typename O, typename Dist, typename Sampler>
MetricAuditReport<O> audit_metric(const Dist& distance, Sampler&& sample,
                                  std::size_t n, double tol = 1e-9) {
  MetricAuditReport<O> report;
  report.samples = n;
  report.tolerance = tol;
  for (std::size_t i = 0; i < n; ++i) {
    O x = sample();
    O y = sample();
    O z = sample();
    detail::audit_triple(distance, x, y, z, tol, report.violations);
  }
  return report;
}

// Exhaustive variant: checks identity and symmetry on every ordered pair and
// the triangle inequality on every ordered triple of the given points.
// Intended for small samples (the cost is cubic in the number of points).
template <typename O, typename Dist>
MetricAuditReport<O> audit_metric_exhaustive(const Dist& distance,
                                             const std::vector<O>& points,
                                             double tol = 1e-9) {
  if (points.empty())
    throw EmptyInputError("metric audit needs at least one point");
  MetricAuditReport<O> report;
  report.tolerance = tol;

  for (const O& x : points) {
    const double dxx = distance(x, x);
    if (!(std::abs(dxx) <= tol))
      report.violations.push_back({Axiom::kIdentity, {x}, dxx, 0.0});
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dij = distance(points[i], points[j]);
      const double dji = distance(points[j], points[i]);
      if (!(std::abs(dij - dji) <= tol))
        report.violations.push_back({Axiom::kSymmetry, {points[i], points[j]}, dij, dji});
      if (std::abs(dij) <= tol && !(points[i] == points[j]))
        report.violations.push_back({Axiom::kIdentity, {points[i], points[j]}, dij, 0.0});
    }
  }
  for (const O& x : points) {
    for (const O& y : points) {
      const double dxy = distance(x, y);
      for (const O& z : points) {
        ++report.samples;
        const double bound = distance(x, z) + distance(z, y);
        if (!(dxy <= bound + tol))
          report.violations.push_back({Axiom::kTriangle, {x, y, z}, dxy, bound});
      }
    }
  }
  return report;
}

}  // namespace colldist

#endif  // COLLDIST_AUDIT_HPP

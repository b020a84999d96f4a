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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "colldist/audit.hpp"
#include "colldist/errors.hpp"
#include "colldist/ground.hpp"
#include "test_support.hpp"

using colldist::Axiom;
using colldist::GroundMetric;
using colldist::absolute_difference_metric;
using colldist::audit_metric;
using colldist::audit_metric_exhaustive;
using colldist::discrete_metric;
using colldist::lift_to_ground;
using colldist::steinhaus_distance;
using colldist::steinhaus_transform;

TEST_CASE("absolute difference ground") {
  const GroundMetric<double> d = absolute_difference_metric();
  CHECK(d(1.5, 4.0) == 2.5);
  CHECK(d(4.0, 1.5) == 2.5);
  CHECK(d(3.0, 3.0) == 0.0);
  CHECK(d.has_null_element());
  CHECK(d.null_element() == 0.0);
  CHECK(d.null_distance(-2.0) == 2.0);
  CHECK_FALSE(d.has_upper_bound());
  CHECK_THROWS_AS(d.upper_bound(), colldist::ConfigError);
}

TEST_CASE("discrete ground") {
  const GroundMetric<std::string> d = discrete_metric<std::string>(std::string{});
  CHECK(d("a", "a") == 0.0);
  CHECK(d("a", "b") == 1.0);
  CHECK(d.null_distance("a") == 1.0);
  CHECK(d.null_distance("") == 0.0);
  CHECK(d.has_upper_bound());
  CHECK(d.upper_bound() == 1.0);
}

TEST_CASE("ground metric rejects bad construction") {
  CHECK_THROWS_AS(GroundMetric<double>(nullptr), colldist::ConfigError);
  CHECK_THROWS_AS(
      GroundMetric<double>([](const double&, const double&) { return 0.0; },
                           std::nullopt, -1.0),
      colldist::ConfigError);
  const GroundMetric<double> bare =
      lift_to_ground<double>([](const double& x, const double& y) { return std::abs(x - y); });
  CHECK_FALSE(bare.has_null_element());
  CHECK_THROWS_AS(bare.null_element(), colldist::ConfigError);
  CHECK_THROWS_AS(bare.null_distance(1.0), colldist::ConfigError);
}

TEST_CASE("steinhaus normalization values") {
  const GroundMetric<double> d = absolute_difference_metric();
  // 2*|1-3| / (|1-0| + |3-0| + |1-3|) = 4/6.
  CHECK(steinhaus_distance(d, 0.0, 1.0, 3.0) == doctest::Approx(2.0 / 3.0));
  // A zero denominator means both points sit on the reference.
  CHECK(steinhaus_distance(d, 0.0, 0.0, 0.0) == 0.0);
  CHECK(steinhaus_distance(d, 5.0, 5.0, 5.0) == 0.0);
}

TEST_CASE("steinhaus transform keeps the null element and bounds the result") {
  const GroundMetric<double> normalized = steinhaus_transform(absolute_difference_metric());
  CHECK(normalized.has_null_element());
  CHECK(normalized.null_element() == 0.0);
  CHECK(normalized.has_upper_bound());
  CHECK(normalized.upper_bound() == 1.0);

  auto rng = testsupport::make_rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double x = testsupport::pick_real(rng, -50.0, 50.0);
    const double y = testsupport::pick_real(rng, -50.0, 50.0);
    const double v = normalized(x, y);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK(normalized(x, x) == 0.0);
    if (x != y) CHECK(v > 0.0);
  }
}

TEST_CASE("steinhaus transform of a metric satisfies the axioms") {
  auto rng = testsupport::make_rng(23);
  const auto sample = [&rng]() {
    return 0.5 * static_cast<double>(testsupport::pick(rng, 0, 8));
  };

  const GroundMetric<double> around_null = steinhaus_transform(absolute_difference_metric());
  const auto report =
      audit_metric<double>([&](const double& x, const double& y) { return around_null(x, y); },
                           sample, 2000, 1e-12);
  CHECK(report.clean());

  const GroundMetric<double> around_two =
      steinhaus_transform(absolute_difference_metric(), 2.0);
  const auto report2 =
      audit_metric<double>([&](const double& x, const double& y) { return around_two(x, y); },
                           sample, 2000, 1e-12);
  CHECK(report2.clean());
}

TEST_CASE("audit harness flags planted violations") {
  const std::vector<int> points = {0, 1, 2};

  // d(x, x) = 1 breaks identity outright.
  const auto reflexive_bad = [](const int& x, const int& y) {
    return x == y ? 1.0 : 2.0;
  };
  auto report = audit_metric_exhaustive<int>(reflexive_bad, points);
  CHECK(report.count(Axiom::kIdentity) == points.size());

  // Vanishing on a distinct pair breaks the other half of identity.
  const auto collapsing = [](const int& x, const int& y) {
    return (x + y == 1) ? 0.0 : std::abs(x - y);
  };
  report = audit_metric_exhaustive<int>(collapsing, points);
  CHECK(report.count(Axiom::kIdentity) > 0);

  // Order-dependent values break symmetry.
  const auto asymmetric = [](const int& x, const int& y) {
    return x < y ? 1.0 : (x == y ? 0.0 : 2.0);
  };
  report = audit_metric_exhaustive<int>(asymmetric, points);
  CHECK(report.count(Axiom::kSymmetry) > 0);

  // A shortcut through the middle point breaks the triangle inequality.
  const auto detour = [](const int& x, const int& y) {
    if (x == y) return 0.0;
    return (std::abs(x - y) == 2) ? 10.0 : 1.0;
  };
  report = audit_metric_exhaustive<int>(detour, points);
  CHECK(report.count(Axiom::kTriangle) > 0);
  for (const auto& v : report.violations) {
    if (v.axiom == Axiom::kTriangle) {
      CHECK(v.witness.size() == 3);
      CHECK(v.lhs > v.rhs);
    }
  }

  // A genuine metric on the same points is clean.
  const auto honest = [](const int& x, const int& y) {
    return static_cast<double>(std::abs(x - y));
  };
  report = audit_metric_exhaustive<int>(honest, points);
  CHECK(report.clean());
  CHECK(report.samples == points.size() * points.size() * points.size());
}

TEST_CASE("sampled audit reports the requested sample count") {
  auto rng = testsupport::make_rng(7);
  const auto sample = [&rng]() { return static_cast<int>(testsupport::pick(rng, 0, 5)); };
  const auto metric = [](const int& x, const int& y) {
    return static_cast<double>(std::abs(x - y));
  };
  const auto report = audit_metric<int>(metric, sample, 150);
  CHECK(report.samples == 150);
  CHECK(report.tolerance == 1e-9);
  CHECK(report.clean());
}

TEST_CASE("exhaustive audit rejects an empty point set") {
  const auto metric = [](const int&, const int&) { return 0.0; };
  CHECK_THROWS_AS(audit_metric_exhaustive<int>(metric, {}), colldist::EmptyInputError);
}

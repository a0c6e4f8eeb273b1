// Copyright 2026 The hcover Authors
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
#include <limits>
#include <random>

#include "hcover/bodies.hpp"

using namespace hcover;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational sum_abs(const RationalPoint& x) {
  Rational s = 0;
  for (const auto& v : x) s += abs(v);
  return s;
}

double power_sum(const FloatPoint& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return s;
}

}  // namespace

TEST_CASE("contains_exact examples") {
  CHECK(contains_exact(BodySpec::simplex(2), {q(1), q(1)}));
  CHECK_FALSE(contains_exact(BodySpec::simplex(2), {q(3, 2), q(3, 4)}));
  CHECK(contains_exact(BodySpec::cross_polytope(3, q(4, 3)), {q(-2), q(1), q(1)}));
  CHECK_FALSE(contains_exact(BodySpec::cross_polytope(3, q(4, 3)), {q(-2), q(1), q(1, 1000) + 1}));
  CHECK_FALSE(contains_exact(BodySpec::simplex(2), {q(-1, 10), q(1)}));
  CHECK(contains_exact(BodySpec::quarter_lp(2, 1.0), {q(1), q(1)}));
}

TEST_CASE("contains_exact rejects bad input") {
  CHECK_THROWS_AS(contains_exact(BodySpec::simplex(2), {q(1)}), std::invalid_argument);
  CHECK_THROWS_AS(contains_exact(BodySpec::lp(2, 2.0), {q(1), q(0)}), std::invalid_argument);
  CHECK_THROWS_AS(BodySpec::simplex(0), std::invalid_argument);
  CHECK_THROWS_AS(BodySpec::simplex(2, q(-1)), std::invalid_argument);
  CHECK_THROWS_AS(BodySpec::lp(2, 0.5), std::invalid_argument);
}

TEST_CASE("contains_float examples") {
  CHECK(contains_float(BodySpec::quarter_lp(2, 2.0), {1.0, 1.0}, 1e-9));
  CHECK_FALSE(contains_float(BodySpec::lp(3, 2.0), {2.0, 0.0, 0.0}, 1e-9));
  CHECK(contains_float(BodySpec::quarter_lp(2, 2.0, q(3, 2)), {1.2, 1.0}, 1e-9));
  CHECK_FALSE(contains_float(BodySpec::quarter_lp(2, 2.0), {-0.5, 0.0}, 1e-9));
  CHECK(contains_float(BodySpec::lp(2, 2.0), {-0.5, 0.0}, 1e-9));
  CHECK_THROWS_AS(contains_float(BodySpec::lp(2, 2.0), {std::numeric_limits<double>::quiet_NaN(), 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(contains_float(BodySpec::lp(2, 2.0), {std::numeric_limits<double>::infinity(), 0.0}),
                  std::invalid_argument);
}

TEST_CASE("vertices") {
  CHECK(vertices(BodySpec::simplex(2)) == std::vector<RationalPoint>{{0, 0}, {2, 0}, {0, 2}});
  const auto cross = vertices(BodySpec::cross_polytope(2));
  CHECK(cross == std::vector<RationalPoint>{{2, 0}, {-2, 0}, {0, 2}, {0, -2}});
  CHECK(vertices(BodySpec::simplex(3, q(4, 3))) ==
        std::vector<RationalPoint>{{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}});
  CHECK_THROWS_AS(vertices(BodySpec::quarter_lp(2, 2.0)), std::invalid_argument);
  CHECK(vertices(BodySpec::lp(2, 1.0)).size() == 4);
}

TEST_CASE("vertices lie on the boundary") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& body : {BodySpec::simplex(n, q(n + 2, n)), BodySpec::cross_polytope(n, q(7, 3))}) {
      for (const auto& v : vertices(body)) {
        CHECK(contains_exact(body, v));
        if (sum_abs(v) != 0) CHECK(sum_abs(v) == body.radius_pow());
      }
    }
  }
}

TEST_CASE("scaling consistency (property)") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Rational s = q(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 20));
    RationalPoint x;
    for (int i = 0; i < n; ++i) x.push_back(q(static_cast<long>(rng() % 41) - 10, 1 + static_cast<long>(rng() % 7)));
    RationalPoint shrunk = x;
    for (auto& v : shrunk) v /= s;
    for (bool cross : {false, true}) {
      const BodySpec scaled = cross ? BodySpec::cross_polytope(n, s) : BodySpec::simplex(n, s);
      const BodySpec unit = cross ? BodySpec::cross_polytope(n) : BodySpec::simplex(n);
      REQUIRE(contains_exact(scaled, x) == contains_exact(unit, shrunk));
    }
  }
}

TEST_CASE("contains_float agrees with contains_exact at p = 1 away from the boundary") {
  std::mt19937_64 rng(99);
  const double tol = 1e-9;
  int compared = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RationalPoint x;
    for (int i = 0; i < n; ++i) x.push_back(q(static_cast<long>(rng() % 61) - 20, 1 + static_cast<long>(rng() % 9)));
    for (bool cross : {false, true}) {
      const BodySpec exact = cross ? BodySpec::cross_polytope(n) : BodySpec::simplex(n);
      const BodySpec curved = cross ? BodySpec::lp(n, 1.0) : BodySpec::quarter_lp(n, 1.0);
      const double gap = std::fabs(sum_abs(x).get_d() - n);
      if (gap <= 2 * tol * n) continue;
      ++compared;
      REQUIRE(contains_float(curved, to_float(x), tol) == contains_exact(exact, x));
    }
  }
  CHECK(compared > 5000);
}

TEST_CASE("exact samples: examples and determinism") {
  const auto one = sample_exact(BodySpec::simplex(2, q(3, 2)), 1, 7);
  REQUIRE(one.size() == 1);
  const Rational s = one[0][0] + one[0][1];
  CHECK(s > 2);
  CHECK(s <= 3);
  CHECK(sgn(one[0][0]) >= 0);
  CHECK(sgn(one[0][1]) >= 0);

  const auto line = sample_exact(BodySpec::cross_polytope(1, q(2)), 3, 1);
  REQUIRE(line.size() == 3);
  for (const auto& x : line) {
    REQUIRE(x.size() == 1);
    CHECK(abs(x[0]) <= 2);
  }

  CHECK(sample_exact(BodySpec::cross_polytope(4, q(5, 4)), 50, 11) ==
        sample_exact(BodySpec::cross_polytope(4, q(5, 4)), 50, 11));
  CHECK(sample_exact(BodySpec::cross_polytope(4, q(5, 4)), 50, 11) !=
        sample_exact(BodySpec::cross_polytope(4, q(5, 4)), 50, 12));
  CHECK_THROWS_AS(sample_exact(BodySpec::simplex(2), 0, 1), std::invalid_argument);
}

TEST_CASE("exact samples are inside and four in five are in the outer shell") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& body : {BodySpec::simplex(n, q(n + 3, n)), BodySpec::cross_polytope(n, q(n + 2, n))}) {
      const auto pts = sample_exact(body, 200, 5);
      int shell = 0;
      for (const auto& x : pts) {
        REQUIRE(contains_exact(body, x));
        if (sum_abs(x) > body.radius_pow() - 1) ++shell;
      }
      CHECK(shell >= 160);
    }
  }
}

TEST_CASE("float samples are inside, shell-biased and deterministic") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (int n : {2, 3, 5}) {
      for (const auto& body : {BodySpec::quarter_lp(n, p, q(n + 2, n)), BodySpec::lp(n, p, q(n + 2, n))}) {
        const auto pts = sample_float(body, 200, 17);
        int shell = 0;
        for (const auto& x : pts) {
          REQUIRE(contains_float(body, x, 1e-9));
          if (power_sum(x, p) > body.radius_pow().get_d() - 1.0) ++shell;
        }
        CHECK(shell >= 160);
        CHECK(pts == sample_float(body, 200, 17));
      }
    }
  }
}

TEST_CASE("sample_boundary routes by body kind") {
  CHECK(std::holds_alternative<std::vector<RationalPoint>>(sample_boundary(BodySpec::simplex(2), 3, 0)));
  CHECK(std::holds_alternative<std::vector<RationalPoint>>(sample_boundary(BodySpec::lp(2, 1.0), 3, 0)));
  CHECK(std::holds_alternative<std::vector<FloatPoint>>(sample_boundary(BodySpec::lp(2, 2.0), 3, 0)));
}

TEST_CASE("rational formatting") {
  CHECK(to_string(q(3, 4)) == "3/4");
  CHECK(to_string(q(6, 3)) == "2/1");
  CHECK(to_string(q(-2, 4)) == "-1/2");
}

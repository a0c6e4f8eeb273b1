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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hcover {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;
using FloatPoint = std::vector<double>;

enum class Family { Simplex, CrossPolytope, QuarterLp, Lp };

std::string_view family_name(Family family);

// A body in normalized form, scaled about the origin:
//
//   Simplex        {x >= 0, sum x_i     <= n * s}
//   CrossPolytope  {        sum |x_i|   <= n * s}
//   QuarterLp      {x >= 0, sum x_i^p   <= n * s^p}
//   Lp             {        sum |x_i|^p <= n * s^p}
//
// The scale is carried as s^p (exactly s for the polytopes and for p == 1).
// Covering scales are ((n + k) / n)^(1/p), so s^p stays rational even when s
// is not.
struct BodySpec {
  Family family = Family::Simplex;
  int n = 1;
  double p = 1.0;
  Rational scale_pow = 1;

  static BodySpec simplex(int n, const Rational& scale = 1);
  static BodySpec cross_polytope(int n, const Rational& scale = 1);
  static BodySpec quarter_lp(int n, double p, const Rational& scale_pow = 1);
  static BodySpec lp(int n, double p, const Rational& scale_pow = 1);

  // Simplex, CrossPolytope, or an l_p family at p == 1. Decided exactly.
  bool polytopal() const;
  // Simplex and QuarterLp live in the nonnegative orthant.
  bool orthant() const;
  // s as a double; exact_scale() requires polytopal().
  double scale() const;
  const Rational& exact_scale() const;
  // n * s^p: the bound on the defining sum.
  Rational radius_pow() const;
};

// Exact membership for polytopal bodies (closed: the boundary is inside).
// Throws std::invalid_argument on a curved body or a dimension mismatch.
bool contains_exact(const BodySpec& body, const RationalPoint& x);

inline constexpr double kDefaultTol = 1e-9;

// Floating-point membership with relative tolerance:
// sum |x_i|^p <= n * s^p * (1 + tol), and x_i >= -tol for orthant bodies.
bool contains_float(const BodySpec& body, const FloatPoint& x, double tol = kDefaultTol);

// Polytopal bodies only: Simplex gives the origin and (n s) e_i; CrossPolytope
// gives +-(n s) e_i.
std::vector<RationalPoint> vertices(const BodySpec& body);

// Deterministic samples in the body. Four in five land in the outer shell,
// where the defining sum lies within min(1, n s^p) of its maximum; the fifth
// is uniform over the body. Exact rationals for polytopal bodies.
std::vector<RationalPoint> sample_exact(const BodySpec& body, int count, std::uint64_t seed);
std::vector<FloatPoint> sample_float(const BodySpec& body, int count, std::uint64_t seed);

using SampleSet = std::variant<std::vector<RationalPoint>, std::vector<FloatPoint>>;
SampleSet sample_boundary(const BodySpec& body, int count, std::uint64_t seed);

// Nearest double when numerator and denominator are both below 2^53 (one
// correctly rounded division); GMP's truncating conversion otherwise.
double to_double(const Rational& q);

FloatPoint to_float(const RationalPoint& x);

// Always "num/den", e.g. "3/4", "2/1".
std::string to_string(const Rational& q);

}  // namespace hcover

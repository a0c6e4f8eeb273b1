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

// Growth constants and threshold sequences for gamma_{2^n}.
//
// With 2^n translates, the largest admissible k grows linearly in n. The
// limiting ratios k/n are roots of the Stirling growth rates of the counts:
//
//   c1:  (1 + c)^(1+c) / c^c = 2                      C(n + cn, n)^(1/n) -> 2
//   c3:  2^(c-1) (1 + c)^(1+c) / c^c = 1              (2^cn C(n + cn, cn))^(1/n) -> 2
//   c4:  2^(c-1) / (c^c (1 - c)^(1-c)) = 1            (2^cn C(n, cn))^(1/n) -> 2
//
// The cross-polytope ratio sits between c3 and c4 because
// 2^k C(n, k) <= m2(n, k) <= 2^k C(n + k, k).

#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hcover/bodies.hpp"

namespace hcover {

struct Bracket {
  double lo = 0.0;
  double hi = 1.0;
};

// Bisection for f(r) = target with f monotone on the bracket. Narrows until
// the bracket is within tol and |f(r) - target| <= tol, or until the bracket
// cannot shrink further in double precision. Throws std::invalid_argument if
// f(lo) and f(hi) do not straddle target.
double solve_root(const std::function<double(double)>& f, double target, Bracket bracket, double tol);

double growth_f1(double c);
double growth_f3(double c);
double growth_f4(double c);
// The c4 equation with (1 + c)^(1+c) in the denominator instead of
// (1 - c)^(1-c). Bounded by about 0.6375 on (0, 1), so it never reaches 1.
double growth_f4_alt(double c);

struct GrowthConstants {
  double c1 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double residual_c1 = 0.0;
  double residual_c3 = 0.0;
  double residual_c4 = 0.0;
  // Root of growth_f4_alt = 1, if any exists on (0, 1).
  std::optional<double> c4_alt;
  // Supremum of growth_f4_alt on (0, 1), located by golden-section search.
  double c4_alt_max = 0.0;
};

GrowthConstants growth_constants();

// Unique x > 0 with (1 + x)^(1+x) / x^x = t. Requires t > 1.
double a_of_t(double t);

// Largest k with C(n + k, n) <= 2^n.
int k_of_n_simplex(int n);

// Largest k with m2(n, k) <= 2^n, from a rolling Delannoy table.
int k_max_crosspolytope(int n);

struct SandwichThresholds {
  // Largest k with 2^k C(n + k, k) <= 2^n.
  int k1 = 0;
  // Last k before 2^k C(n, k) first exceeds 2^n, capped at n.
  int k2 = 0;
};

SandwichThresholds k1_k2_of_n(int n);

struct ConvergenceRow {
  int n = 0;
  int k = 0;
  double ratio = 0.0;
  double bound = 0.0;
};

// One row per n: the 2^n threshold k for the family (k(n) for the orthant
// families, k_max(n) for the symmetric ones) and the bound (n / (n + k))^(1/p).
std::vector<ConvergenceRow> convergence_table(Family family, const std::vector<int>& n_list, double p = 1.0);

enum class RogersZongVariant { Remark, Intro };

std::string_view variant_name(RogersZongVariant v);

// (1 + 1/r)^n (n ln n + ln ln n + 5n) for Remark, with n ln ln n as the middle
// term for Intro. Requires n >= 3 and 0 < r < 1.
double rogers_zong_bound(int n, double r, RogersZongVariant variant);

}  // namespace hcover

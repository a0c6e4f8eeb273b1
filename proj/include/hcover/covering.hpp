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

// Lattice coverings of the normalized bodies by integer translates.
//
// With B the normalized simplex and M = M1(n, k), B + M is exactly
// ((n + k) / n) B; the same holds for the cross-polytope with M2(n, k). For
// the quarter-l_p ball and the l_p ball only the inclusion
// B + M  ⊇  ((n + k) / n)^(1/p) B  holds, certified by the scale sequence
// t_{n,p,k} below. Each inclusion gives an upper bound on the covering
// functional: gamma_{#M}(B) <= 1 / scale.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcover/bodies.hpp"
#include "hcover/combinatorics.hpp"
#include "hcover/lattice_sets.hpp"

namespace hcover {

// Raised when a step that the covering argument guarantees cannot fail does.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// y = z + residual with z a translate and residual in the base body.
struct WitnessDecomposition {
  LatticePoint z;
  RationalPoint residual;
  // k' with k' + n - 1 < sum y_i <= k' + n (0 inside the base body).
  int shell_level = 0;
};

// Requires y in ((n + k) / n) * simplex, else std::invalid_argument.
// z_i = min(floor(y_i), remaining budget), taken in coordinate order.
WitnessDecomposition decompose_simplex(int n, int k, const RationalPoint& y);

// Requires y in ((n + k) / n) * cross-polytope. Runs the simplex greedy on |y|
// and restores the signs (sign +1 at y_i = 0).
WitnessDecomposition decompose_crosspolytope(int n, int k, const RationalPoint& y);

enum class CoverKind { SimplexM1, CrossPolytopeM2 };

struct VerifyOptions {
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
  // Test hook: damage the first witness before it is checked. A correct
  // verifier must then report the proposition as violated.
  bool corrupt_first_witness = false;
};

struct VerificationReport {
  Family family = Family::Simplex;
  int n = 0;
  int k = 0;
  double p = 1.0;
  bool exact = true;
  int samples = 0;
  int witness_failures = 0;
  // Translate containment is only claimed (and checked) for p == 1.
  bool translates_checked = false;
  std::uint64_t translates = 0;
  std::uint64_t translate_failures = 0;
  // Shell level (p == 1) or number of peeling steps (p > 1) -> sample count.
  std::map<int, int> level_histogram;

  bool holds() const { return witness_failures == 0 && translate_failures == 0; }
};

// Both inclusions of ((n + k) / n) B = B + M in exact arithmetic: witnesses
// for shell-biased samples, and every translate's vertices inside the scaled
// body (exhaustive over M).
VerificationReport verify_covering_exact(CoverKind kind, int n, int k,
                                         const VerifyOptions& options = {});

// t_0 = 1 and t_{k+1} > 1 solving (t - 1)^p + (n - 1) t^p = n t_k^p.
struct TSequence {
  int n = 0;
  double p = 1.0;
  std::vector<double> values;
  // Filled only for p == 1, where t_k = (n + k) / n.
  std::vector<Rational> exact;
};

TSequence t_sequence(int n, double p, int k_max);

struct PeelResult {
  bool ok = false;
  LatticePoint z;
  FloatPoint residual;
  int steps = 0;
};

// Repeatedly moves the largest-magnitude coordinate one unit toward zero until
// the residual lies in the base body (within tol), for at most k steps.
PeelResult peel(Family family, int n, double p, int k, const FloatPoint& y, double tol);

// The ⊇ inclusion for QuarterLp (with M1) or Lp (with M2). p == 1 routes to
// verify_covering_exact with the matching polytope.
VerificationReport verify_covering_lp(Family family, int n, double p, int k,
                                      const VerifyOptions& options = {});

struct GammaBound {
  Family family = Family::Simplex;
  int n = 0;
  int k = 0;
  double p = 1.0;
  BigCount m;
  double rho = 1.0;
  // n / (n + k) whenever p == 1.
  std::optional<Rational> rho_exact;
};

GammaBound gamma_upper_bound(Family family, int n, double p, int k);

}  // namespace hcover

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

#include <cstddef>
#include <vector>

namespace hcover {

// Exact nonnegative counts. Every count in this library fits here regardless
// of magnitude (2^4096 and beyond).
using BigCount = mpz_class;

// C(n, k). Zero when k < 0 or k > n, so sums over j need no index guards.
BigCount binomial(long n, long k);

// #M1(n, k) = C(n + k, n): nonnegative integer points with coordinate sum <= k.
BigCount m1_count(int n, int k);

// #M2(n, k) via the closed form sum_{j=0..n} C(n, j) C(k + j, n).
BigCount m2_count_closed(int n, int k);

// #M2(n, k) via the slice-by-last-coordinate recurrence
//   m2(n, k) = m2(n - 1, k) + 2 * sum_{j < k} m2(n - 1, j),  m2(1, k) = 2k + 1.
BigCount m2_count_recurrence(int n, int k);

BigCount power_of_two(unsigned n);

enum class CountKind { M1, M2 };

// Memoized (n_max + 1) x (k_max + 1) table of m1 or m2 values, row-major.
// Row n = 0 is the degenerate origin-only row (all ones). Immutable once built.
class CountTable {
 public:
  CountTable(CountKind kind, int n_max, int k_max);

  CountKind kind() const { return kind_; }
  int n_max() const { return n_max_; }
  int k_max() const { return k_max_; }

  const BigCount& at(int n, int k) const;

 private:
  CountKind kind_;
  int n_max_;
  int k_max_;
  std::vector<BigCount> entries_;
};

}  // namespace hcover

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

#include "hcover/combinatorics.hpp"

#include <stdexcept>

namespace hcover {

BigCount binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigCount m1_count(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("m1_count: negative argument");
  return binomial(static_cast<long>(n) + k, n);
}

BigCount m2_count_closed(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("m2_count_closed: negative argument");
  BigCount total = 0;
  for (int j = 0; j <= n; ++j) {
    total += binomial(n, j) * binomial(static_cast<long>(k) + j, n);
  }
  return total;
}

BigCount m2_count_recurrence(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("m2_count_recurrence: negative argument");
  return CountTable(CountKind::M2, n, k).at(n, k);
}

BigCount power_of_two(unsigned n) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return out;
}

CountTable::CountTable(CountKind kind, int n_max, int k_max)
    : kind_(kind), n_max_(n_max), k_max_(k_max) {
  if (n_max < 0 || k_max < 0) throw std::invalid_argument("CountTable: negative size");
  const auto cols = static_cast<std::size_t>(k_max) + 1;
  entries_.assign((static_cast<std::size_t>(n_max) + 1) * cols, BigCount(1));
  auto cell = [&](int n, int k) -> BigCount& {
    return entries_[static_cast<std::size_t>(n) * cols + static_cast<std::size_t>(k)];
  };
  for (int n = 1; n <= n_max; ++n) {
    if (kind == CountKind::M1) {
      // Last coordinate is 0 or uses up at least one unit of budget.
      for (int k = 1; k <= k_max; ++k) cell(n, k) = cell(n - 1, k) + cell(n, k - 1);
    } else {
      // |x_n| = j contributes 2 * m2(n - 1, k - j) for j >= 1.
      BigCount prefix = 0;
      for (int k = 0; k <= k_max; ++k) {
        cell(n, k) = cell(n - 1, k) + 2 * prefix;
        prefix += cell(n - 1, k);
      }
    }
  }
}

const BigCount& CountTable::at(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > k_max_) {
    throw std::out_of_range("CountTable::at: index outside table");
  }
  return entries_[static_cast<std::size_t>(n) * (static_cast<std::size_t>(k_max_) + 1) +
                  static_cast<std::size_t>(k)];
}

}  // namespace hcover

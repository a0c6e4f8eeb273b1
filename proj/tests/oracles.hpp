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

// Independent brute-force references for the tests. Nothing here calls into
// the library.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace hcover::oracle {

// Visits every point of the box [lo, hi]^n in odometer order.
inline void for_each_in_box(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> x(static_cast<std::size_t>(n), lo);
  for (;;) {
    fn(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == hi) x[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

inline bool in_m1(const std::vector<int>& x, int k) {
  int s = 0;
  for (int v : x) {
    if (v < 0) return false;
    s += v;
  }
  return s <= k;
}

inline bool in_m2(const std::vector<int>& x, int k) {
  int s = 0;
  for (int v : x) s += std::abs(v);
  return s <= k;
}

inline std::uint64_t count_m1(int n, int k) {
  std::uint64_t c = 0;
  for_each_in_box(n, 0, k, [&](const std::vector<int>& x) { c += in_m1(x, k); });
  return c;
}

inline std::uint64_t count_m2(int n, int k) {
  std::uint64_t c = 0;
  for_each_in_box(n, -k, k, [&](const std::vector<int>& x) { c += in_m2(x, k); });
  return c;
}

// Lexicographically sorted members, via the box scan (odometer order is lexicographic).
inline std::vector<std::vector<int>> members(bool signed_set, int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_in_box(n, signed_set ? -k : 0, k, [&](const std::vector<int>& x) {
    if (signed_set ? in_m2(x, k) : in_m1(x, k)) out.push_back(x);
  });
  return out;
}

// Pascal's triangle in 64-bit (exact up to row 60).
inline std::vector<std::vector<std::uint64_t>> pascal(int rows) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(rows) + 1);
  for (int r = 0; r <= rows; ++r) {
    auto& row = t[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) {
      row[static_cast<std::size_t>(c)] =
          t[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] +
          t[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)];
    }
  }
  return t;
}

// 2^n as a decimal string by repeated doubling of digits.
inline std::string power_of_two_decimal(int n) {
  std::string digits = "1";
  for (int i = 0; i < n; ++i) {
    int carry = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      const int d = (*it - '0') * 2 + carry;
      *it = static_cast<char>('0' + d % 10);
      carry = d / 10;
    }
    if (carry) digits.insert(digits.begin(), static_cast<char>('0' + carry));
  }
  return digits;
}

}  // namespace hcover::oracle

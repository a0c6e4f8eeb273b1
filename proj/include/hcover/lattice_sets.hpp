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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcover/combinatorics.hpp"

namespace hcover {

// Coordinates of a translate. Members of M1/M2(n, k) satisfy |z_i| <= k, so a
// machine integer is exact for every k the counts can address.
using LatticePoint = std::vector<std::int64_t>;

enum class SetKind { M1, M2 };

// M1(n, k) = {x in Z^n : x >= 0, sum x_i <= k}
// M2(n, k) = {x in Z^n : sum |x_i| <= k}
struct LatticeSetSpec {
  SetKind kind = SetKind::M1;
  int n = 1;
  int k = 0;
};

BigCount cardinality(const LatticeSetSpec& spec);

// Throws std::invalid_argument when z.size() != spec.n.
bool member(const LatticeSetSpec& spec, const LatticePoint& z);

// Streams the members of M1/M2(n, k) in lexicographic order, one at a time.
// Memory is O(n) regardless of the cardinality.
//
//   LatticeStream s(spec);
//   for (LatticePoint z; s.next(z);) { ... }
class LatticeStream {
 public:
  explicit LatticeStream(const LatticeSetSpec& spec);

  // Writes the next member into `out`; false once exhausted.
  bool next(LatticePoint& out);

 private:
  // Lexicographically smallest completion of coords_[from..] given the budget
  // left after coords_[0..from).
  void fill_minimal(std::size_t from);

  LatticeSetSpec spec_;
  LatticePoint coords_;
  bool started_ = false;
  bool done_ = false;
};

// Calls `fn` for every member in lexicographic order.
void for_each_member(const LatticeSetSpec& spec,
                     const std::function<void(const LatticePoint&)>& fn);

// Comma-separated integers, e.g. "-1,0,2".
std::string to_csv(const LatticePoint& z);

}  // namespace hcover

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

#include "hcover/lattice_sets.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hcover {
namespace {

void check_spec(const LatticeSetSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("lattice set: n must be >= 1");
  if (spec.k < 0) throw std::invalid_argument("lattice set: k must be >= 0");
}

std::int64_t cost(SetKind kind, std::int64_t v) { return kind == SetKind::M1 ? v : std::llabs(v); }

}  // namespace

BigCount cardinality(const LatticeSetSpec& spec) {
  check_spec(spec);
  return spec.kind == SetKind::M1 ? m1_count(spec.n, spec.k) : m2_count_closed(spec.n, spec.k);
}

bool member(const LatticeSetSpec& spec, const LatticePoint& z) {
  check_spec(spec);
  if (z.size() != static_cast<std::size_t>(spec.n)) {
    throw std::invalid_argument("member: dimension mismatch");
  }
  std::int64_t used = 0;
  for (auto v : z) {
    if (spec.kind == SetKind::M1 && v < 0) return false;
    used += std::llabs(v);
    if (used > spec.k) return false;
  }
  return true;
}

LatticeStream::LatticeStream(const LatticeSetSpec& spec)
    : spec_(spec), coords_(static_cast<std::size_t>(spec.n), 0) {
  check_spec(spec);
}

void LatticeStream::fill_minimal(std::size_t from) {
  std::int64_t budget = spec_.k;
  for (std::size_t j = 0; j < from; ++j) budget -= cost(spec_.kind, coords_[j]);
  for (std::size_t j = from; j < coords_.size(); ++j) coords_[j] = 0;
  if (spec_.kind == SetKind::M2 && from < coords_.size()) coords_[from] = -budget;
}

bool LatticeStream::next(LatticePoint& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill_minimal(0);
    out = coords_;
    return true;
  }
  std::vector<std::int64_t> budget_before(coords_.size());
  std::int64_t budget = spec_.k;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    budget_before[j] = budget;
    budget -= cost(spec_.kind, coords_[j]);
  }
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (coords_[i] < budget_before[i]) {
      ++coords_[i];
      fill_minimal(i + 1);
      out = coords_;
      return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_member(const LatticeSetSpec& spec,
                     const std::function<void(const LatticePoint&)>& fn) {
  LatticeStream stream(spec);
  for (LatticePoint z; stream.next(z);) fn(z);
}

std::string to_csv(const LatticePoint& z) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(z[i]);
  }
  return out;
}

}  // namespace hcover

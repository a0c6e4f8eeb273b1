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

#include "hcover/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcover/combinatorics.hpp"

namespace hcover {
namespace {

constexpr double kEdge = 1e-6;

// c ln c, continuous at 0.
double xlogx(double c) { return c == 0.0 ? 0.0 : c * std::log(c); }

// Largest k >= 0 with pred(k), for pred true at 0 and monotone true -> false.
template <typename Pred>
int last_true(Pred pred) {
  int lo = 0;
  int hi = 1;
  while (pred(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

void check_n(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

double solve_root(const std::function<double(double)>& f, double target, Bracket bracket, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("solve_root: tol must be nonnegative");
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo < hi)) throw std::invalid_argument("solve_root: empty bracket");
  double g_lo = f(lo) - target;
  double g_hi = f(hi) - target;
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if (!(std::signbit(g_lo) != std::signbit(g_hi))) {
    throw std::invalid_argument("solve_root: bracket does not straddle the target");
  }
  for (;;) {
    if (hi - lo <= tol && std::min(std::fabs(g_lo), std::fabs(g_hi)) <= tol) break;
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = f(mid) - target;
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }
  return std::fabs(g_lo) <= std::fabs(g_hi) ? lo : hi;
}

double growth_f1(double c) { return std::exp((1.0 + c) * std::log1p(c) - xlogx(c)); }

double growth_f3(double c) {
  return std::exp((c - 1.0) * std::numbers::ln2 + (1.0 + c) * std::log1p(c) - xlogx(c));
}

double growth_f4(double c) {
  return std::exp((c - 1.0) * std::numbers::ln2 - xlogx(c) - (1.0 - c) * std::log1p(-c));
}

double growth_f4_alt(double c) {
  return std::exp((c - 1.0) * std::numbers::ln2 - xlogx(c) - (1.0 + c) * std::log1p(c));
}

GrowthConstants growth_constants() {
  GrowthConstants g;
  g.c1 = solve_root(growth_f1, 2.0, {kEdge, 1.0 - kEdge}, 0.0);
  g.c3 = solve_root(growth_f3, 1.0, {kEdge, 1.0 - kEdge}, 0.0);
  // growth_f4 increases up to c = 2/3 and decreases after.
  g.c4 = solve_root(growth_f4, 1.0, {kEdge, 2.0 / 3.0}, 0.0);
  g.residual_c1 = std::fabs(growth_f1(g.c1) - 2.0);
  g.residual_c3 = std::fabs(growth_f3(g.c3) - 1.0);
  g.residual_c4 = std::fabs(growth_f4(g.c4) - 1.0);

  // log growth_f4_alt is concave, so golden-section finds its maximum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kEdge;
  double b = 1.0 - kEdge;
  while (b - a > 1e-12) {
    const double x1 = b - inv_phi * (b - a);
    const double x2 = a + inv_phi * (b - a);
    if (growth_f4_alt(x1) < growth_f4_alt(x2)) {
      a = x1;
    } else {
      b = x2;
    }
  }
  const double argmax = 0.5 * (a + b);
  g.c4_alt_max = growth_f4_alt(argmax);
  if (g.c4_alt_max >= 1.0) g.c4_alt = solve_root(growth_f4_alt, 1.0, {kEdge, argmax}, 0.0);
  return g;
}

double a_of_t(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) throw std::invalid_argument("a_of_t: t must be finite and > 1");
  double hi = 1.0;
  while (growth_f1(hi) <= t) hi *= 2.0;
  return solve_root(growth_f1, t, {0.0, hi}, 0.0);
}

int k_of_n_simplex(int n) {
  check_n(n, "k_of_n_simplex");
  const BigCount budget = power_of_two(static_cast<unsigned>(n));
  return last_true([&](int k) { return m1_count(n, k) <= budget; });
}

int k_max_crosspolytope(int n) {
  check_n(n, "k_max_crosspolytope");
  const BigCount budget = power_of_two(static_cast<unsigned>(n));
  // m2(n, n) > 2^n, so columns 0..n always contain the crossing.
  const auto cols = static_cast<std::size_t>(n) + 1;
  std::vector<BigCount> row(cols, BigCount(1));
  for (int dim = 1; dim <= n; ++dim) {
    // m2(dim, k) = m2(dim-1, k-1) + m2(dim-1, k) + m2(dim, k-1)
    BigCount diag = row[0];
    for (std::size_t k = 1; k < cols; ++k) {
      BigCount above = row[k];
      row[k] = diag + above + row[k - 1];
      diag = std::move(above);
    }
  }
  int k = 0;
  while (static_cast<std::size_t>(k + 1) < cols && row[static_cast<std::size_t>(k) + 1] <= budget) ++k;
  return k;
}

SandwichThresholds k1_k2_of_n(int n) {
  check_n(n, "k1_k2_of_n");
  const BigCount budget = power_of_two(static_cast<unsigned>(n));
  SandwichThresholds out;
  out.k1 = last_true([&](int k) {
    return power_of_two(static_cast<unsigned>(k)) * binomial(static_cast<long>(n) + k, k) <= budget;
  });
  // 2^k C(n, k) rises until k = 2n/3 and then falls, so take the first crossing.
  int k = 0;
  while (k < n && power_of_two(static_cast<unsigned>(k + 1)) * binomial(n, k + 1) <= budget) ++k;
  out.k2 = k;
  return out;
}

std::vector<ConvergenceRow> convergence_table(Family family, const std::vector<int>& n_list, double p) {
  const bool orthant = family == Family::Simplex || family == Family::QuarterLp;
  if (family == Family::Simplex || family == Family::CrossPolytope) p = 1.0;
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("convergence_table: p must be finite and >= 1");
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    ConvergenceRow row;
    row.n = n;
    row.k = orthant ? k_of_n_simplex(n) : k_max_crosspolytope(n);
    row.ratio = static_cast<double>(row.k) / n;
    const double base = static_cast<double>(n) / (n + row.k);
    row.bound = p == 1.0 ? base : std::pow(base, 1.0 / p);
    rows.push_back(row);
  }
  return rows;
}

std::string_view variant_name(RogersZongVariant v) {
  return v == RogersZongVariant::Remark ? "remark" : "intro";
}

double rogers_zong_bound(int n, double r, RogersZongVariant variant) {
  if (n < 3) throw std::invalid_argument("rogers_zong_bound: n must be >= 3");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("rogers_zong_bound: r must lie in (0, 1)");
  const double dn = n;
  const double loglog = std::log(std::log(dn));
  const double middle = variant == RogersZongVariant::Remark ? loglog : dn * loglog;
  return std::pow(1.0 + 1.0 / r, dn) * (dn * std::log(dn) + middle + 5.0 * dn);
}

}  // namespace hcover

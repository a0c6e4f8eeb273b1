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

#include "hcover/covering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hcover {
namespace {

void check_nk(int n, int k) {
  if (n < 1) throw std::invalid_argument("covering: n must be >= 1");
  if (k < 0) throw std::invalid_argument("covering: k must be >= 0");
}

Rational covering_scale(int n, int k) {
  Rational s(n + k, n);
  s.canonicalize();
  return s;
}

std::int64_t floor_to_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::int64_t ceil_to_int(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

// y >= 0 with sum y <= n + k. Shell level m = max(0, ceil(sum y) - n); the
// floors always have room for m units because the fractional parts sum to
// less than n.
WitnessDecomposition greedy_split(int n, const RationalPoint& y) {
  Rational sum = 0;
  for (const auto& yi : y) sum += yi;
  const std::int64_t level = std::max<std::int64_t>(0, ceil_to_int(sum) - n);

  WitnessDecomposition out;
  out.shell_level = static_cast<int>(level);
  out.z.reserve(y.size());
  out.residual.reserve(y.size());
  std::int64_t remaining = level;
  for (const auto& yi : y) {
    const std::int64_t zi = std::min(floor_to_int(yi), remaining);
    remaining -= zi;
    out.z.push_back(zi);
    out.residual.push_back(yi - zi);
  }
  if (remaining != 0) {
    throw InvariantViolation("greedy_split: integer parts cannot absorb the shell level");
  }
  return out;
}

bool exact_witness_valid(const LatticeSetSpec& set, const BodySpec& base, const RationalPoint& y,
                         const WitnessDecomposition& w) {
  if (w.z.size() != y.size() || w.residual.size() != y.size()) return false;
  if (!member(set, w.z)) return false;
  if (!contains_exact(base, w.residual)) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (w.residual[i] + w.z[i] != y[i]) return false;
  }
  return true;
}

void corrupt(LatticePoint& z, int k) { z.front() += k + 1; }

}  // namespace

WitnessDecomposition decompose_simplex(int n, int k, const RationalPoint& y) {
  check_nk(n, k);
  if (!contains_exact(BodySpec::simplex(n, covering_scale(n, k)), y)) {
    throw std::invalid_argument("decompose_simplex: point outside the scaled simplex");
  }
  return greedy_split(n, y);
}

WitnessDecomposition decompose_crosspolytope(int n, int k, const RationalPoint& y) {
  check_nk(n, k);
  if (!contains_exact(BodySpec::cross_polytope(n, covering_scale(n, k)), y)) {
    throw std::invalid_argument("decompose_crosspolytope: point outside the scaled cross-polytope");
  }
  RationalPoint magnitude;
  magnitude.reserve(y.size());
  for (const auto& yi : y) magnitude.push_back(abs(yi));
  WitnessDecomposition w = greedy_split(n, magnitude);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) < 0) {
      w.z[i] = -w.z[i];
      w.residual[i] = -w.residual[i];
    }
  }
  return w;
}

VerificationReport verify_covering_exact(CoverKind kind, int n, int k, const VerifyOptions& options) {
  check_nk(n, k);
  if (options.samples < 1) throw std::invalid_argument("verify_covering_exact: samples must be >= 1");
  const bool simplex = kind == CoverKind::SimplexM1;
  const BodySpec base = simplex ? BodySpec::simplex(n) : BodySpec::cross_polytope(n);
  const BodySpec scaled =
      simplex ? BodySpec::simplex(n, covering_scale(n, k)) : BodySpec::cross_polytope(n, covering_scale(n, k));
  const LatticeSetSpec set{simplex ? SetKind::M1 : SetKind::M2, n, k};

  VerificationReport report;
  report.family = base.family;
  report.n = n;
  report.k = k;
  report.samples = options.samples;

  // ⊇: every sampled point of the scaled body has a witness.
  const auto points = sample_exact(scaled, options.samples, options.seed);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& y = points[i];
    try {
      WitnessDecomposition w = simplex ? decompose_simplex(n, k, y) : decompose_crosspolytope(n, k, y);
      if (i == 0 && options.corrupt_first_witness) corrupt(w.z, k);
      ++report.level_histogram[w.shell_level];
      if (!exact_witness_valid(set, base, y, w)) ++report.witness_failures;
    } catch (const InvariantViolation&) {
      ++report.witness_failures;
    }
  }

  // ⊆: base + z lies in the scaled body for every z; checking vertices suffices.
  report.translates_checked = true;
  const auto corners = vertices(base);
  for_each_member(set, [&](const LatticePoint& z) {
    ++report.translates;
    const bool inside = std::all_of(corners.begin(), corners.end(), [&](const RationalPoint& v) {
      RationalPoint moved = v;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += z[i];
      return contains_exact(scaled, moved);
    });
    if (!inside) ++report.translate_failures;
  });
  return report;
}

TSequence t_sequence(int n, double p, int k_max) {
  if (n < 1) throw std::invalid_argument("t_sequence: n must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("t_sequence: p must be finite and >= 1");
  if (k_max < 0) throw std::invalid_argument("t_sequence: k_max must be >= 0");

  TSequence seq;
  seq.n = n;
  seq.p = p;
  seq.values.reserve(static_cast<std::size_t>(k_max) + 1);
  if (p == 1.0) {
    for (int k = 0; k <= k_max; ++k) {
      seq.exact.push_back(covering_scale(n, k));
      seq.values.push_back(to_double(seq.exact.back()));
    }
    return seq;
  }

  constexpr double kTol = 1e-12;
  double t = 1.0;
  seq.values.push_back(t);
  for (int k = 0; k < k_max; ++k) {
    const double rhs = n * std::pow(t, p);
    // Strictly increasing for t >= 1, negative at t_k.
    auto g = [&](double s) { return std::pow(s - 1.0, p) + (n - 1) * std::pow(s, p) - rhs; };
    double lo = t;
    double hi = t + 1.0;
    for (int widen = 0; g(hi) < 0.0; ++widen) {
      if (widen > 64) throw InvariantViolation("t_sequence: no sign change while widening bracket");
      lo = hi;
      hi = t + 2.0 * (hi - t);
    }
    while (hi - lo > kTol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    t = 0.5 * (lo + hi);
    seq.values.push_back(t);
  }
  return seq;
}

PeelResult peel(Family family, int n, double p, int k, const FloatPoint& y, double tol) {
  check_nk(n, k);
  if (family != Family::QuarterLp && family != Family::Lp) {
    throw std::invalid_argument("peel: family must be qlp or lp");
  }
  const BodySpec base = family == Family::QuarterLp ? BodySpec::quarter_lp(n, p) : BodySpec::lp(n, p);
  if (y.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("peel: dimension mismatch");

  PeelResult out;
  out.z.assign(y.size(), 0);
  out.residual = y;
  while (!contains_float(base, out.residual, tol)) {
    if (out.steps == k) return out;
    std::size_t i = 0;
    for (std::size_t j = 1; j < out.residual.size(); ++j) {
      if (std::fabs(out.residual[j]) > std::fabs(out.residual[i])) i = j;
    }
    const int dir = out.residual[i] < 0.0 ? -1 : 1;
    out.residual[i] -= dir;
    out.z[i] += dir;
    ++out.steps;
  }
  out.ok = true;
  return out;
}

VerificationReport verify_covering_lp(Family family, int n, double p, int k, const VerifyOptions& options) {
  check_nk(n, k);
  if (family != Family::QuarterLp && family != Family::Lp) {
    throw std::invalid_argument("verify_covering_lp: family must be qlp or lp");
  }
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("verify_covering_lp: p must be finite and >= 1");
  if (options.samples < 1) throw std::invalid_argument("verify_covering_lp: samples must be >= 1");
  if (p == 1.0) {
    VerificationReport exact = verify_covering_exact(
        family == Family::QuarterLp ? CoverKind::SimplexM1 : CoverKind::CrossPolytopeM2, n, k, options);
    exact.family = family;
    return exact;
  }

  const bool quarter = family == Family::QuarterLp;
  const BodySpec base = quarter ? BodySpec::quarter_lp(n, p) : BodySpec::lp(n, p);
  const BodySpec scaled = quarter ? BodySpec::quarter_lp(n, p, covering_scale(n, k))
                                  : BodySpec::lp(n, p, covering_scale(n, k));
  const LatticeSetSpec set{quarter ? SetKind::M1 : SetKind::M2, n, k};

  VerificationReport report;
  report.family = family;
  report.n = n;
  report.k = k;
  report.p = p;
  report.exact = false;
  report.samples = options.samples;

  const auto points = sample_float(scaled, options.samples, options.seed);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& y = points[i];
    PeelResult r = peel(family, n, p, k, y, options.tol);
    if (i == 0 && options.corrupt_first_witness) corrupt(r.z, k);
    ++report.level_histogram[r.steps];
    // Recheck the witness independently of the peeling loop.
    FloatPoint residual(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) residual[j] = y[j] - static_cast<double>(r.z[j]);
    if (!r.ok || !member(set, r.z) || !contains_float(base, residual, options.tol)) ++report.witness_failures;
  }
  return report;
}

GammaBound gamma_upper_bound(Family family, int n, double p, int k) {
  check_nk(n, k);
  const bool polytope = family == Family::Simplex || family == Family::CrossPolytope;
  if (polytope) p = 1.0;
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("gamma_upper_bound: p must be finite and >= 1");

  GammaBound b;
  b.family = family;
  b.n = n;
  b.k = k;
  b.p = p;
  const bool uses_m1 = family == Family::Simplex || family == Family::QuarterLp;
  b.m = uses_m1 ? m1_count(n, k) : m2_count_closed(n, k);
  Rational ratio(n, n + k);
  ratio.canonicalize();
  if (p == 1.0) {
    b.rho_exact = ratio;
    b.rho = to_double(ratio);
  } else {
    b.rho = std::pow(to_double(ratio), 1.0 / p);
  }
  return b;
}

}  // namespace hcover

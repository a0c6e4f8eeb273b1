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

#include "hcover/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hcover {
namespace {

BodySpec make(Family family, int n, double p, const Rational& scale_pow) {
  if (n < 1) throw std::invalid_argument("body: n must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("body: p must be finite and >= 1");
  if (sgn(scale_pow) <= 0) throw std::invalid_argument("body: scale must be positive");
  BodySpec b;
  b.family = family;
  b.n = n;
  b.p = p;
  b.scale_pow = scale_pow;
  return b;
}

void check_dim(const BodySpec& body, std::size_t size) {
  if (size != static_cast<std::size_t>(body.n)) {
    throw std::invalid_argument("body: point dimension does not match body");
  }
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Rational in [0, 1] with a random denominator in [1, 1000].
Rational unit_rational(std::mt19937_64& rng, bool closed) {
  const std::uint64_t den = 1 + rng() % 1000;
  const std::uint64_t num = rng() % (closed ? den + 1 : den);
  Rational q(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

// `parts` nonnegative rationals summing to exactly 1 (sorted uniform cuts).
std::vector<Rational> rational_partition(std::mt19937_64& rng, int parts) {
  std::vector<Rational> cuts;
  cuts.reserve(static_cast<std::size_t>(parts) + 1);
  cuts.emplace_back(0);
  for (int i = 0; i + 1 < parts; ++i) cuts.push_back(unit_rational(rng, true));
  cuts.emplace_back(1);
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(parts));
  for (std::size_t i = 1; i < cuts.size(); ++i) out.push_back(cuts[i] - cuts[i - 1]);
  return out;
}

bool in_shell(int index) { return index % 5 != 4; }

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Simplex: return "simplex";
    case Family::CrossPolytope: return "crosspolytope";
    case Family::QuarterLp: return "qlp";
    case Family::Lp: return "lp";
  }
  return "unknown";
}

BodySpec BodySpec::simplex(int n, const Rational& scale) { return make(Family::Simplex, n, 1.0, scale); }
BodySpec BodySpec::cross_polytope(int n, const Rational& scale) {
  return make(Family::CrossPolytope, n, 1.0, scale);
}
BodySpec BodySpec::quarter_lp(int n, double p, const Rational& scale_pow) {
  return make(Family::QuarterLp, n, p, scale_pow);
}
BodySpec BodySpec::lp(int n, double p, const Rational& scale_pow) { return make(Family::Lp, n, p, scale_pow); }

bool BodySpec::polytopal() const {
  return family == Family::Simplex || family == Family::CrossPolytope || p == 1.0;
}

bool BodySpec::orthant() const { return family == Family::Simplex || family == Family::QuarterLp; }

double BodySpec::scale() const {
  return polytopal() ? to_double(scale_pow) : std::pow(to_double(scale_pow), 1.0 / p);
}

const Rational& BodySpec::exact_scale() const {
  if (!polytopal()) throw std::invalid_argument("exact_scale: curved body has no exact scale");
  return scale_pow;
}

Rational BodySpec::radius_pow() const { return Rational(n) * scale_pow; }

bool contains_exact(const BodySpec& body, const RationalPoint& x) {
  if (!body.polytopal()) throw std::invalid_argument("contains_exact: body is not polytopal");
  check_dim(body, x.size());
  Rational sum = 0;
  for (const auto& xi : x) {
    if (body.orthant() && sgn(xi) < 0) return false;
    sum += abs(xi);
  }
  return sum <= body.radius_pow();
}

bool contains_float(const BodySpec& body, const FloatPoint& x, double tol) {
  check_dim(body, x.size());
  if (!(tol > 0.0)) throw std::invalid_argument("contains_float: tol must be positive");
  double sum = 0.0;
  for (double xi : x) {
    if (!std::isfinite(xi)) throw std::invalid_argument("contains_float: nonfinite coordinate");
    if (body.orthant() && xi < -tol) return false;
    sum += std::pow(std::fabs(xi), body.p);
  }
  return sum <= to_double(body.radius_pow()) * (1.0 + tol);
}

std::vector<RationalPoint> vertices(const BodySpec& body) {
  if (!body.polytopal()) throw std::invalid_argument("vertices: curved body has no vertex list");
  const Rational r = body.radius_pow();
  const auto n = static_cast<std::size_t>(body.n);
  std::vector<RationalPoint> out;
  if (body.orthant()) {
    out.emplace_back(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(n, Rational(0));
      out.back()[i] = r;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (int sign : {1, -1}) {
        out.emplace_back(n, Rational(0));
        out.back()[i] = sign * r;
      }
    }
  }
  return out;
}

std::vector<RationalPoint> sample_exact(const BodySpec& body, int count, std::uint64_t seed) {
  if (!body.polytopal()) throw std::invalid_argument("sample_exact: body is not polytopal");
  if (count < 1) throw std::invalid_argument("sample_exact: count must be >= 1");
  std::mt19937_64 rng(seed);
  const Rational radius = body.radius_pow();
  const Rational width = radius < 1 ? radius : Rational(1);
  std::vector<RationalPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    RationalPoint x;
    x.reserve(static_cast<std::size_t>(body.n));
    if (in_shell(i)) {
      // Sum in (radius - width, radius], split by a uniform partition.
      const Rational total = radius - width * unit_rational(rng, false);
      for (const auto& part : rational_partition(rng, body.n)) x.push_back(total * part);
    } else {
      // n of n + 1 Dirichlet(1) parts: uniform over the simplex.
      auto parts = rational_partition(rng, body.n + 1);
      parts.pop_back();
      for (const auto& part : parts) x.push_back(radius * part);
    }
    if (!body.orthant()) {
      for (auto& xi : x) {
        if (rng() & 1U) xi = -xi;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<FloatPoint> sample_float(const BodySpec& body, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_float: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> shape(1.0 / body.p, 1.0);
  std::exponential_distribution<double> tail(1.0);
  const double radius = to_double(body.radius_pow());
  const double width = std::min(1.0, radius);
  std::vector<FloatPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    // |x_i|^p proportional to Gamma(1/p) weights gives the cone measure on the
    // l_p sphere; an extra Exp(1) term in the normalizer makes it uniform in
    // the ball.
    std::vector<double> w(static_cast<std::size_t>(body.n));
    double total = 0.0;
    for (auto& wi : w) {
      wi = shape(rng);
      total += wi;
    }
    double power_sum;
    if (in_shell(i)) {
      power_sum = radius - width * unit(rng);
    } else {
      power_sum = radius * total / (total + tail(rng));
    }
    FloatPoint x(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      x[j] = total > 0.0 ? std::pow(power_sum * w[j] / total, 1.0 / body.p) : 0.0;
      if (!body.orthant() && (rng() & 1U)) x[j] = -x[j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

SampleSet sample_boundary(const BodySpec& body, int count, std::uint64_t seed) {
  if (body.polytopal()) return sample_exact(body, count, seed);
  return sample_float(body, count, seed);
}

double to_double(const Rational& q) {
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53) {
    return q.get_num().get_d() / q.get_den().get_d();
  }
  return q.get_d();
}

FloatPoint to_float(const RationalPoint& x) {
  FloatPoint out;
  out.reserve(x.size());
  for (const auto& xi : x) out.push_back(to_double(xi));
  return out;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hcover

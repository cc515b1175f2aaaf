// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/conic.hpp"

#include <string>

#include "conicmod/error.hpp"
#include "conicmod/symbols.hpp"

namespace conicmod {

namespace {

constexpr std::uint64_t kEllipticScale = 1'000'000;

void require_oracle_scale(const PrimeModulus& p, std::uint64_t bound) {
  if (p.value() > bound) {
    throw DomainError(ErrorCode::OracleScaleExceeded,
                      "p = " + std::to_string(p.value()) + " exceeds " +
                          std::to_string(bound));
  }
}

int mod4(std::int64_t a) { return static_cast<int>(((a % 4) + 4) % 4); }

std::int64_t abs64(std::int64_t a) { return a < 0 ? -a : a; }

}  // namespace

Curve::Curve(std::int64_t a, PrimeModulus p)
    : a_(a), p_(p), a_residue_(p.reduce(a)) {
  if (a == 0 || abs64(a) > kMaxCoefficient) {
    throw DomainError(ErrorCode::OutOfRange,
                      "curve coefficient must satisfy 0 < |a| <= 2^31, got " +
                          std::to_string(a));
  }
}

bool Curve::contains(Residue x, Residue y) const noexcept {
  const Residue rhs = mod_add(mod_mul(a_residue_, mod_mul(x, x, p_), p_), 1, p_);
  return mod_mul(y, y, p_) == rhs;
}

Point::Point(const Curve& curve, Residue x, Residue y)
    : curve_(curve), x_(x % curve.p()), y_(y % curve.p()) {
  if (!curve_.contains(x_, y_)) {
    throw DomainError(ErrorCode::NotOnCurve,
                      "(" + std::to_string(x_) + ", " + std::to_string(y_) +
                          ") is not on y^2 = " + std::to_string(curve.a()) +
                          " x^2 + 1 mod " + std::to_string(curve.p()));
  }
}

std::vector<Point> enumerate_solutions(const Curve& c) {
  const PrimeModulus& p = c.modulus();
  require_odd(p, "enumerate_solutions");
  require_oracle_scale(p, kOracleScale);

  // roots[t] lists every y with y^2 = t, ascending.
  std::vector<std::vector<Residue>> roots(p.value());
  for (Residue y = 0; y < p.value(); ++y) roots[mod_mul(y, y, p)].push_back(y);

  std::vector<Point> points;
  for (Residue x = 0; x < p.value(); ++x) {
    const Residue t = mod_add(mod_mul(c.a_mod_p(), mod_mul(x, x, p), p), 1, p);
    for (Residue y : roots[t]) points.emplace_back(c, x, y);
  }
  return points;
}

CountResult count_formula(const Curve& c) {
  require_odd(c.modulus(), "count_formula");
  const auto p = static_cast<std::int64_t>(c.p());
  const std::int64_t n = c.degenerate() ? 2 * p : p - legendre(c.a(), c.modulus());
  return {n, p - n};
}

CountResult count_general(const GeneralConic& g) {
  require_odd(g.p, "count_general");
  const Residue m1 = g.p.reduce(g.m1);
  const Residue m2 = g.p.reduce(g.m2);
  const Residue n = g.p.reduce(g.n);
  if (m1 == 0 || m2 == 0 || n == 0) {
    throw DomainError(ErrorCode::DegenerateCoefficient,
                      "m1 m2 n vanishes mod " + std::to_string(g.p.value()));
  }
  // -m1 m2 as a residue; the product of signed inputs could overflow.
  const Residue minus_m1m2 = mod_neg(mod_mul(m1, m2, g.p), g.p);
  const auto p = static_cast<std::int64_t>(g.p.value());
  const std::int64_t count = p - legendre(static_cast<std::int64_t>(minus_m1m2), g.p);
  return {count, p - count};
}

CountResult char_sum_count(const Curve& c) {
  const PrimeModulus& p = c.modulus();
  require_odd(p, "char_sum_count");
  std::int64_t sum = 0;
  for (Residue x = 0; x < p.value(); ++x) {
    const Residue t = mod_add(mod_mul(c.a_mod_p(), mod_mul(x, x, p), p), 1, p);
    sum += legendre(static_cast<std::int64_t>(t), p);
  }
  const auto pv = static_cast<std::int64_t>(p.value());
  return {pv + sum, -sum};
}

std::int64_t s_sum(std::int64_t n, const PrimeModulus& p) {
  require_odd(p, "s_sum");
  const Residue nr = p.reduce(n);
  if (nr == 0) {
    throw DomainError(ErrorCode::DegenerateCoefficient,
                      "p = " + std::to_string(p.value()) + " divides n");
  }
  std::int64_t sum = 0;
  for (Residue b = 0; b < p.value(); ++b) {
    const Residue t = mod_mul(b, mod_sub(b, nr, p), p);
    sum += legendre(static_cast<std::int64_t>(t), p);
  }
  return sum;
}

std::int64_t elliptic_b(std::int64_t k2, std::int64_t k1, std::int64_t k0,
                        const PrimeModulus& p) {
  require_odd(p, "elliptic_b");
  require_oracle_scale(p, kEllipticScale);
  const Residue c2 = p.reduce(k2);
  const Residue c1 = p.reduce(k1);
  const Residue c0 = p.reduce(k0);
  std::int64_t sum = 0;
  for (Residue x = 0; x < p.value(); ++x) {
    // Horner: ((x + k2) x + k1) x + k0
    Residue t = mod_add(x, c2, p);
    t = mod_add(mod_mul(t, x, p), c1, p);
    t = mod_add(mod_mul(t, x, p), c0, p);
    sum += legendre(static_cast<std::int64_t>(t), p);
  }
  return -sum;
}

std::int64_t conductor(std::int64_t a) {
  if (a == 0 || mod4(a) == 0) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "conductor undefined for a = " + std::to_string(a));
  }
  return mod4(a) == 1 ? abs64(a) : 4 * abs64(a);
}

std::int64_t level(std::int64_t a) {
  if (a == 0 || mod4(a) % 2 == 0) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "level defined only for a = 1, 3 mod 4, got a = " +
                          std::to_string(a));
  }
  return mod4(a) == 1 ? abs64(a) : 4 * abs64(a);
}

}  // namespace conicmod

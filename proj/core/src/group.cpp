// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "conicmod/error.hpp"
#include "conicmod/symbols.hpp"

namespace conicmod {

namespace {

void require_same_curve(const Curve& lhs, const Curve& rhs) {
  if (lhs != rhs) {
    throw DomainError(ErrorCode::CurveMismatch,
                      "points on y^2 = " + std::to_string(lhs.a()) + " x^2 + 1 mod " +
                          std::to_string(lhs.p()) + " and y^2 = " +
                          std::to_string(rhs.a()) + " x^2 + 1 mod " +
                          std::to_string(rhs.p()));
  }
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    factors.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

bool is_identity(const Point& P) { return P.x() == 0 && P.y() == 1; }

}  // namespace

Point add(const Point& P, const Point& Q) {
  require_same_curve(P.curve(), Q.curve());
  const Curve& c = P.curve();
  const PrimeModulus& p = c.modulus();
  const Residue x = mod_add(mod_mul(P.x(), Q.y(), p), mod_mul(P.y(), Q.x(), p), p);
  const Residue y = mod_add(mod_mul(P.y(), Q.y(), p),
                            mod_mul(c.a_mod_p(), mod_mul(P.x(), Q.x(), p), p), p);
  return {c, x, y};
}

Point neg(const Point& P) {
  return {P.curve(), mod_neg(P.x(), P.curve().modulus()), P.y()};
}

Point scalar_mul(std::uint64_t k, const Point& P) {
  Point result = Point::identity(P.curve());
  Point base = P;
  while (k != 0) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Point& P) {
  const auto group_order = static_cast<std::uint64_t>(count_formula(P.curve()).N);
  std::uint64_t order = group_order;
  for (std::uint64_t q : distinct_prime_factors(group_order)) {
    while (order % q == 0 && is_identity(scalar_mul(order / q, P))) order /= q;
  }
  if (!is_identity(scalar_mul(order, P))) {
    throw std::logic_error("element order does not divide the group order");
  }
  return order;
}

Point find_generator(const Curve& c) {
  if (c.degenerate()) {
    throw DomainError(ErrorCode::DegenerateCoefficient,
                      "p = " + std::to_string(c.p()) + " divides a = " +
                          std::to_string(c.a()));
  }
  const auto group_order = static_cast<std::uint64_t>(count_formula(c).N);
  for (const Point& P : enumerate_solutions(c)) {
    if (element_order(P) == group_order) return P;
  }
  throw DomainError(ErrorCode::NotFound,
                    "no point of order " + std::to_string(group_order));
}

ZEmbedding::ZEmbedding(const Curve& curve) : curve_(curve) {
  if (curve.degenerate()) return;
  if (legendre(static_cast<std::int64_t>(curve.a_mod_p()), curve.modulus()) == 1) {
    sqrt_a_ = sqrt_mod(curve.a_mod_p(), curve.modulus());
  }
}

Fp2Elem z_embed(const Point& P, const ZEmbedding& emb) {
  require_same_curve(P.curve(), emb.curve());
  const PrimeModulus& p = emb.curve().modulus();
  if (auto s = emb.sqrt_a()) {
    return {mod_add(mod_mul(*s, P.x(), p), P.y(), p), 0, emb.basis(), p};
  }
  return {P.y(), P.x(), emb.basis(), p};
}

CyclicityCertificate verify_cyclic(const Curve& c) {
  Point generator = find_generator(c);
  std::vector<Point> chain;
  const auto order = static_cast<std::uint64_t>(count_formula(c).N);
  chain.reserve(order);
  Point current = generator;
  for (std::uint64_t k = 1; k <= order; ++k) {
    chain.push_back(current);
    current = add(current, generator);
  }

  std::vector<Point> sorted = chain;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != enumerate_solutions(c) || !is_identity(chain.back())) {
    throw std::logic_error("multiples of the generator do not cover the curve");
  }
  return {c, order, generator, std::move(chain)};
}

}  // namespace conicmod

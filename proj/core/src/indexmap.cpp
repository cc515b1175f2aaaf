// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/indexmap.hpp"

#include <string>
#include <utility>

#include "conicmod/error.hpp"

namespace conicmod {

namespace {

constexpr std::int64_t kMaxBijectionArgument = 10'000;

void require_odd_argument(std::int64_t a) {
  if (a < 3 || a % 2 == 0) {
    throw DomainError(ErrorCode::OutOfRange,
                      "index map needs odd a >= 3, got " + std::to_string(a));
  }
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace

UnitSolution solve_unit(std::int64_t a) {
  require_odd_argument(a);
  // Invariant: old_r = 4 old_x + a old_y, r = 4 x + a y.
  std::int64_t old_r = 4, r = a;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  return {old_x, old_y};
}

IndexTriple n_to_m(std::int64_t n, std::int64_t a) {
  require_odd_argument(a);
  if (n == a) {
    throw DomainError(ErrorCode::ExcludedValue,
                      "n = a = " + std::to_string(a) + " has no partner");
  }
  if (n < 1 || n > 2 * a - 1 || n % 2 == 0) {
    throw DomainError(ErrorCode::OutOfRange,
                      "n = " + std::to_string(n) + " is not an odd value in [1, " +
                          std::to_string(2 * a - 1) + "]");
  }
  const UnitSolution unit = solve_unit(a);
  // Particular solution m0 = n X0, 2 ell0 - 1 = -n Y0; then shift by
  // m = m0 + k a, ell = ell0 + 2k.
  const std::int64_t m0 = n * unit.x;
  const std::int64_t ell0 = (1 - n * unit.y) / 2;
  const std::int64_t k = -floor_div(m0, a);
  const std::int64_t m = m0 + k * a;
  const std::int64_t ell = ell0 + 2 * k;
  return {n, m, ell, a};
}

IndexTriple m_to_n(std::int64_t m, std::int64_t a) {
  require_odd_argument(a);
  if (m < 1 || m > a - 1) {
    throw DomainError(ErrorCode::OutOfRange,
                      "m = " + std::to_string(m) + " outside [1, " +
                          std::to_string(a - 1) + "]");
  }
  // 4m + a is odd, so reducing it mod 2a lands in [1, 2a - 1].
  const std::int64_t ell = (4 * m + a) / (2 * a);
  return {4 * m + a - 2 * a * ell, m, ell, a};
}

std::vector<IndexTriple> index_table(std::int64_t a) {
  require_odd_argument(a);
  std::vector<IndexTriple> table;
  table.reserve(static_cast<std::size_t>(a - 1));
  for (std::int64_t m = 1; m < a; ++m) table.push_back(m_to_n(m, a));
  return table;
}

bool verify_bijection(std::int64_t a) {
  require_odd_argument(a);
  if (a > kMaxBijectionArgument) {
    throw DomainError(ErrorCode::OutOfRange,
                      "a = " + std::to_string(a) + " exceeds 10^4");
  }
  std::vector<bool> hit(static_cast<std::size_t>(2 * a), false);
  for (const IndexTriple& t : index_table(a)) {
    if (t.n != 4 * t.m - a * (2 * t.ell - 1)) return false;
    if (t.n < 1 || t.n > 2 * a - 1 || t.n % 2 == 0 || t.n == a) return false;
    if (hit[static_cast<std::size_t>(t.n)]) return false;
    hit[static_cast<std::size_t>(t.n)] = true;
    if (n_to_m(t.n, a) != t) return false;
  }
  // a - 1 distinct admissible values out of a - 1 candidates: all covered.
  return true;
}

}  // namespace conicmod

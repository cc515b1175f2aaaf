// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/symbols.hpp"

#include <bit>
#include <string>

#include "conicmod/error.hpp"

namespace conicmod {

namespace {

std::uint64_t magnitude(std::int64_t a) {
  return a >= 0 ? static_cast<std::uint64_t>(a)
                : static_cast<std::uint64_t>(-(a + 1)) + 1;
}

// a mod m for m > 0, result in [0, m).
std::uint64_t floor_mod(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  std::uint64_t r = magnitude(a) % m;
  return r == 0 ? 0 : m - r;
}

// Binary Jacobi on an already reduced numerator 0 <= a < n, n odd.
int jacobi_reduced(std::uint64_t a, std::uint64_t n) {
  int sign = 1;
  while (a != 0) {
    int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    std::uint64_t r = n % a;
    n = a;
    a = r;
  }
  return n == 1 ? sign : 0;
}

int int_mod4(std::int64_t a) { return static_cast<int>(floor_mod(a, 4)); }

}  // namespace

int legendre(std::int64_t a, const PrimeModulus& p) {
  require_odd(p, "legendre");
  Residue e = mod_pow(p.reduce(a), (p.value() - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1) {
    throw DomainError(ErrorCode::OutOfRange,
                      "jacobi denominator must be positive, got " + std::to_string(n));
  }
  if (n % 2 == 0) {
    throw DomainError(ErrorCode::EvenArgument,
                      "jacobi denominator must be odd, got " + std::to_string(n));
  }
  const auto un = static_cast<std::uint64_t>(n);
  return jacobi_reduced(floor_mod(a, un), un);
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

  int sign = 1;
  if (n < 0 && a < 0) sign = -1;
  std::uint64_t odd = magnitude(n);

  int twos = std::countr_zero(odd);
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    odd >>= twos;
    // (a/2) = +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
    std::uint64_t a8 = floor_mod(a, 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) sign = -sign;
  }
  return sign * jacobi_reduced(floor_mod(a, odd), odd);
}

std::int64_t kronecker_period(std::int64_t a) {
  if (a == 0 || int_mod4(a) == 0) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "a = " + std::to_string(a) + " is 0 mod 4");
  }
  std::int64_t abs_a = a < 0 ? -a : a;
  return int_mod4(a) == 1 ? abs_a : 4 * abs_a;
}

}  // namespace conicmod

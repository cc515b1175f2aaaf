// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>

#include "conicmod/modarith.hpp"

namespace conicmod {

// All symbols return -1, 0 or +1.

/// Legendre symbol via Euler's criterion a^((p-1)/2) mod p.
/// Throws EvenModulus for p = 2.
int legendre(std::int64_t a, const PrimeModulus& p);

/// Jacobi symbol (a/n) for odd n >= 1. Throws EvenArgument for even n and
/// OutOfRange for n < 1.
int jacobi(std::int64_t a, std::int64_t n);

/// Kronecker symbol, total over all integer pairs. Edge conventions:
/// (a/0) = 1 iff a = +-1, (a/-1) = -1 iff a < 0.
int kronecker(std::int64_t a, std::int64_t n);

/// Period in n of kronecker(a, n) over primes n coprime to 4a:
/// |a| for a = 1 (mod 4), 4|a| for a = 2, 3 (mod 4).
/// Throws UnsupportedCongruenceClass for a = 0 (mod 4).
std::int64_t kronecker_period(std::int64_t a);

}  // namespace conicmod

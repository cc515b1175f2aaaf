// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <vector>

namespace conicmod {

// For odd a >= 3 the relation n = 4m - a(2 ell - 1) pairs each
// m in {1, ..., a-1} with exactly one odd n in {1, 3, ..., 2a-1} \ {a}.

struct IndexTriple {
  std::int64_t n;
  std::int64_t m;
  std::int64_t ell;
  std::int64_t a;

  friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

struct UnitSolution {
  std::int64_t x;  // 4x + a y = 1
  std::int64_t y;  // always odd

  friend bool operator==(const UnitSolution&, const UnitSolution&) = default;
};

/// Extended gcd of (4, a). Throws OutOfRange unless a is odd and >= 3.
UnitSolution solve_unit(std::int64_t a);

/// Throws ExcludedValue for n = a and OutOfRange for any other n outside the
/// odd range [1, 2a - 1].
IndexTriple n_to_m(std::int64_t n, std::int64_t a);

/// Throws OutOfRange unless 1 <= m <= a - 1.
IndexTriple m_to_n(std::int64_t m, std::int64_t a);

/// The full table m = 1..a-1, ascending m.
std::vector<IndexTriple> index_table(std::int64_t a);

/// True iff m_to_n hits every admissible n once and n_to_m inverts it.
/// Throws OutOfRange for a > 10^4.
bool verify_bijection(std::int64_t a);

}  // namespace conicmod

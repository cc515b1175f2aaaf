// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <vector>

#include "conicmod/error.hpp"
#include "conicmod/indexmap.hpp"
#include "test_support.hpp"

using namespace conicmod;

using conicmod::testing::error_of;
using conicmod::testing::require_property;

TEST_CASE("solve_unit") {
  CHECK(solve_unit(3) == UnitSolution{1, -1});
  CHECK(solve_unit(5) == UnitSolution{-1, 1});
  CHECK(solve_unit(11) == UnitSolution{3, -1});
  for (std::int64_t a = 3; a <= 2001; a += 2) {
    const UnitSolution s = solve_unit(a);
    CHECK(4 * s.x + a * s.y == 1);
    CHECK(s.y % 2 != 0);
  }
  CHECK(error_of([] { solve_unit(4); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { solve_unit(1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("n_to_m examples") {
  CHECK(n_to_m(15, 11) == IndexTriple{15, 1, 0, 11});
  CHECK(n_to_m(1, 11) == IndexTriple{1, 3, 1, 11});
  CHECK(n_to_m(7, 11) == IndexTriple{7, 10, 2, 11});
  CHECK(error_of([] { n_to_m(11, 11); }) == ErrorCode::ExcludedValue);
  CHECK(error_of([] { n_to_m(2, 11); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { n_to_m(23, 11); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { n_to_m(-1, 11); }) == ErrorCode::OutOfRange);
}

TEST_CASE("m_to_n examples") {
  CHECK(m_to_n(9, 11) == IndexTriple{3, 9, 2, 11});
  CHECK(m_to_n(2, 11) == IndexTriple{19, 2, 0, 11});
  CHECK(m_to_n(1, 3) == IndexTriple{1, 1, 1, 3});
  CHECK(error_of([] { m_to_n(0, 11); }) == ErrorCode::OutOfRange);
  CHECK(error_of([] { m_to_n(11, 11); }) == ErrorCode::OutOfRange);
}

TEST_CASE("index_table for a = 11") {
  const std::vector<std::int64_t> ell = {0, 0, 1, 1, 1, 1, 1, 1, 2, 2};
  const std::vector<std::int64_t> n = {15, 19, 1, 5, 9, 13, 17, 21, 3, 7};
  const std::vector<IndexTriple> table = index_table(11);
  REQUIRE(table.size() == 10);
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i] == IndexTriple{n[i], static_cast<std::int64_t>(i) + 1, ell[i], 11});
  }
}

TEST_CASE("round trips") {
  for (std::int64_t a = 3; a <= 151; a += 2) {
    for (std::int64_t m = 1; m < a; ++m) {
      const IndexTriple t = m_to_n(m, a);
      CHECK(t.n == 4 * t.m - a * (2 * t.ell - 1));
      CHECK(n_to_m(t.n, a) == t);
    }
    for (std::int64_t n = 1; n < 2 * a; n += 2) {
      if (n == a) continue;
      CHECK(m_to_n(n_to_m(n, a).m, a).n == n);
    }
  }
}

TEST_CASE("verify_bijection examples") {
  CHECK(verify_bijection(11));
  CHECK(verify_bijection(3));
  CHECK(verify_bijection(99));
  CHECK(error_of([] { verify_bijection(10'001); }) == ErrorCode::OutOfRange);
}

TEST_CASE("indexmap properties on small ranges") {
  require_property(props::bijections_hold(201));
  require_property(props::index_symbol_identities(99));
}

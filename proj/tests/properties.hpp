// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Exhaustive property checks shared by the unit tests (small ranges) and the
// acceptance binary (full ranges). Each returns the number of individual
// checks performed and the first counterexample, if any.

#pragma once

#include <cstdint>
#include <string>

namespace conicmod::props {

struct PropertyResult {
  bool passed = true;
  std::uint64_t checks = 0;
  std::string failure;

  void fail(std::string why) {
    if (passed) failure = std::move(why);
    passed = false;
  }
  void merge(const PropertyResult& other) {
    checks += other.checks;
    if (!other.passed) fail(other.failure);
  }
};

// symbols
PropertyResult kronecker_matches_oracle(std::int64_t range);
PropertyResult legendre_matches_kronecker(std::int64_t p_max);
PropertyResult kronecker_reciprocity(std::int64_t range);
PropertyResult kronecker_multiplicativity(std::int64_t range);
PropertyResult kronecker_vanishing(std::int64_t range);
PropertyResult kronecker_periodicity(std::int64_t n_max, std::int64_t a_range);
PropertyResult kronecker_sign_flips(std::int64_t a_max, std::int64_t n_max);

// conic
PropertyResult counts_agree(std::int64_t p_max, std::int64_t a_range);
PropertyResult degenerate_counts(std::int64_t p_max, std::int64_t a_range);
PropertyResult s_sum_is_minus_one(std::int64_t p_max);
PropertyResult s_sum_telescopes(std::int64_t p_max);
PropertyResult b_is_periodic_in_conductor(std::int64_t p_max, std::int64_t a);

// group
PropertyResult group_laws(std::int64_t p_max, std::int64_t a_range,
                          int triples_per_curve);
PropertyResult z_embedding_laws(std::int64_t p_max, std::int64_t a_range);

// gausssum
PropertyResult gauss_sums_agree(std::int64_t p_max);
PropertyResult residue_split_identities(std::int64_t p_max);
PropertyResult fbar_prime_closed_forms(std::int64_t a_max);
PropertyResult fbar_verified_even_forms();
PropertyResult fbar_matches_index_form(std::int64_t a_max);
PropertyResult period_blocks_repeat(std::int64_t a_max, std::int64_t blocks);
PropertyResult fbar_coefficient_sign_flips(std::int64_t a_max);
PropertyResult theta_identity(int samples, std::int64_t max_terms);

// indexmap
PropertyResult bijections_hold(std::int64_t a_max);
PropertyResult index_symbol_identities(std::int64_t a_max);

}  // namespace conicmod::props

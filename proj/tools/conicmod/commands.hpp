// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "output_record.hpp"

namespace conicmod::cli {

// Each command returns the records it would print. Domain errors surface as
// conicmod::DomainError.

std::vector<OutputRecord> cmd_symbol(std::int64_t a, std::int64_t n);
std::vector<OutputRecord> cmd_count(std::int64_t a, std::uint64_t p);
/// One row per odd prime p <= p_max. Rows are computed on `jobs` threads and
/// always emitted in ascending p.
std::vector<OutputRecord> cmd_scan(std::int64_t a, std::uint64_t p_max, unsigned jobs);
std::vector<OutputRecord> cmd_solutions(std::int64_t a, std::uint64_t p);
std::vector<OutputRecord> cmd_group(std::int64_t a, std::uint64_t p);
std::vector<OutputRecord> cmd_gauss(std::uint64_t p);
std::vector<OutputRecord> cmd_fbar(std::int64_t a);
std::vector<OutputRecord> cmd_quadexp(std::int64_t a);
std::vector<OutputRecord> cmd_theta(double tau_re, double tau_im, std::int64_t terms);
std::vector<OutputRecord> cmd_indexmap(std::int64_t a);
std::vector<OutputRecord> cmd_conductor(std::int64_t a);

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conicmod::cli

// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "conicmod/modarith.hpp"

namespace conicmod {

using ComplexVal = std::complex<double>;

/// Comparison tolerance for sums whose modulus or |a| is at most 500, and
/// the looser bound used beyond that.
inline constexpr double kSmallScaleTolerance = 1e-8;
inline constexpr double kLargeScaleTolerance = 1e-6;
double tolerance_for(std::uint64_t scale) noexcept;

/// Neumaier-compensated accumulator. Terms must be added in a fixed order
/// for results to be reproducible.
class CompensatedSum {
 public:
  void add(ComplexVal term) noexcept;
  ComplexVal value() const noexcept;

 private:
  static void add_component(double& sum, double& carry, double term) noexcept;

  double re_ = 0.0, re_carry_ = 0.0;
  double im_ = 0.0, im_carry_ = 0.0;
};

/// exp(2 pi i k / m) with k first reduced mod m.
ComplexVal unit_root(std::int64_t k, std::int64_t m);

/// A point tau = num/den on the real axis, kept in lowest terms.
class RationalTau {
 public:
  /// Throws OutOfRange for den <= 0.
  RationalTau(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const RationalTau&, const RationalTau&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// q = exp(2 pi i tau) for a = 1 (mod 4); q1 = exp(2 pi i tau / 4) for
/// a = 2, 3 (mod 4).
enum class Nome { q, q1 };
std::string_view to_string(Nome nome) noexcept;

struct SeriesTerm {
  std::int64_t n;
  int coefficient;

  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// One period of the generalized Gaussian sum at tau = 1/|a|.
struct PeriodSumResult {
  std::int64_t a;
  ComplexVal value;
  /// Number of consecutive n in one period: |a| for nome q, 2|a| for q1.
  std::int64_t period;
  Nome nome;
  /// Nonzero terms of the period, ascending n.
  std::vector<SeriesTerm> terms;
  /// sqrt(a) (principal branch), attached for prime |a| and a in
  /// {+-2, +-6, +-10}.
  std::optional<ComplexVal> closed_form;
};

/// sum_{n=1}^{p-1} (n/p) exp(2 pi i n / p).
ComplexVal gauss_sum_character(const PrimeModulus& p);

/// sum_{m=0}^{p-1} exp(2 pi i m^2 / p).
ComplexVal gauss_sum_quadratic(const PrimeModulus& p);

/// sqrt(p) for p = 1 (mod 4), i sqrt(p) for p = 3 (mod 4).
ComplexVal closed_form_gp(const PrimeModulus& p);

/// Sums over quadratic residues (I) and nonresidues (J) of exp(2 pi i a / p).
struct ResidueSplit {
  ComplexVal residues;
  ComplexVal nonresidues;
};
ResidueSplit residue_split(const PrimeModulus& p);

/// One period of sum_n (a/n) q^n (nome q) or sum_{(n,4a)=1} (a/n) q1^n
/// (nome q1) at tau = 1/|a|.
/// Throws UnsupportedCongruenceClass for a = 0 (mod 4), OutOfRange for
/// |a| > 10^4.
PeriodSumResult fbar(std::int64_t a);

/// The same period for odd a = 3 (mod 4), rewritten through the index map as
/// -+ i sum_{m=1}^{|a|-1} (m/|a|) exp(2 pi i m / |a|), sign - for a > 0.
/// Throws UnsupportedCongruenceClass for other classes, OutOfRange for
/// |a| < 3 or |a| > 10^4.
ComplexVal fbar_via_index_map(std::int64_t a);

/// (1/(1+i)) sum_{n=0}^{2|a|-1} exp(2 pi i n^2 / 4|a|) for a > 0, with prefactor
/// i/(1+i) for a < 0. Defined for a = 2 (mod 4).
ComplexVal quad_exp_sum(std::int64_t a);

/// Consecutive one-period blocks of the truncated series at tau = 1/|a|.
/// Throws UnsupportedTau when tau != 1/|a|.
std::vector<ComplexVal> partial_f(std::int64_t a, const RationalTau& tau,
                                  std::int64_t num_periods);

/// Truncations of 1 + sum_{n=1}^{terms} exp(2 pi i n^2 tau) (gauss) and of
/// 1 + 2 sum_{n=1}^{terms} exp(2 pi i n^2 tau) (theta), both built from the
/// same tail sum.
struct ThetaPartial {
  ComplexVal gauss;
  ComplexVal theta;
};

/// Throws NonConvergentTau for tau_im <= 0.
ThetaPartial theta_series(double tau_im, double tau_re, std::int64_t terms);

inline ComplexVal theta_partial(double tau_im, double tau_re, std::int64_t terms) {
  return theta_series(tau_im, tau_re, terms).gauss;
}

/// Truncated character series sum_{n=1}^{terms} (n/p) exp(2 pi i n tau),
/// for comparison against the quadratic series at Im tau > 0.
ComplexVal character_series_partial(const PrimeModulus& p, double tau_im,
                                    double tau_re, std::int64_t terms);

}  // namespace conicmod

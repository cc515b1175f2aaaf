// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/gausssum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "conicmod/error.hpp"
#include "conicmod/symbols.hpp"

namespace conicmod {

namespace {

constexpr std::int64_t kMaxPeriodArgument = 10'000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mod4(std::int64_t a) { return static_cast<int>(((a % 4) + 4) % 4); }

std::int64_t abs64(std::int64_t a) { return a < 0 ? -a : a; }

void require_gauss_scale(const PrimeModulus& p) {
  require_odd(p, "gauss sum");
  if (p.value() > kOracleScale) {
    throw DomainError(ErrorCode::OracleScaleExceeded,
                      "p = " + std::to_string(p.value()) + " exceeds 10^4");
  }
}

void require_period_argument(std::int64_t a) {
  if (a == 0 || mod4(a) == 0) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "a = " + std::to_string(a) + " is 0 mod 4");
  }
  if (abs64(a) > kMaxPeriodArgument) {
    throw DomainError(ErrorCode::OutOfRange,
                      "|a| = " + std::to_string(abs64(a)) + " exceeds 10^4");
  }
}

bool has_closed_form(std::int64_t a) {
  const std::int64_t m = abs64(a);
  if (m == 2 || m == 6 || m == 10) return true;
  return is_prime(static_cast<std::uint64_t>(m));
}

// Nome q1 admits odd n coprime to a; (n, 4a) = 1.
bool q1_admissible(std::int64_t n, std::int64_t a) {
  return n % 2 != 0 && std::gcd(n, abs64(a)) == 1;
}

}  // namespace

double tolerance_for(std::uint64_t scale) noexcept {
  return scale <= 500 ? kSmallScaleTolerance : kLargeScaleTolerance;
}

void CompensatedSum::add_component(double& sum, double& carry, double term) noexcept {
  const double t = sum + term;
  if (std::abs(sum) >= std::abs(term)) {
    carry += (sum - t) + term;
  } else {
    carry += (term - t) + sum;
  }
  sum = t;
}

void CompensatedSum::add(ComplexVal term) noexcept {
  add_component(re_, re_carry_, term.real());
  add_component(im_, im_carry_, term.imag());
}

ComplexVal CompensatedSum::value() const noexcept {
  return {re_ + re_carry_, im_ + im_carry_};
}

ComplexVal unit_root(std::int64_t k, std::int64_t m) {
  const std::int64_t r = ((k % m) + m) % m;
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

RationalTau::RationalTau(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw DomainError(ErrorCode::OutOfRange,
                      "tau denominator must be positive, got " + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string_view to_string(Nome nome) noexcept {
  return nome == Nome::q ? "q" : "q1";
}

ComplexVal gauss_sum_character(const PrimeModulus& p) {
  require_gauss_scale(p);
  const auto m = static_cast<std::int64_t>(p.value());
  CompensatedSum sum;
  for (std::int64_t n = 1; n < m; ++n) {
    sum.add(static_cast<double>(legendre(n, p)) * unit_root(n, m));
  }
  return sum.value();
}

ComplexVal gauss_sum_quadratic(const PrimeModulus& p) {
  require_gauss_scale(p);
  const auto m = static_cast<std::int64_t>(p.value());
  CompensatedSum sum;
  for (std::int64_t k = 0; k < m; ++k) sum.add(unit_root(k * k % m, m));
  return sum.value();
}

ComplexVal closed_form_gp(const PrimeModulus& p) {
  require_odd(p, "closed_form_gp");
  const double root = std::sqrt(static_cast<double>(p.value()));
  return p.value() % 4 == 1 ? ComplexVal{root, 0.0} : ComplexVal{0.0, root};
}

ResidueSplit residue_split(const PrimeModulus& p) {
  require_gauss_scale(p);
  const auto m = static_cast<std::int64_t>(p.value());
  CompensatedSum residues;
  CompensatedSum nonresidues;
  for (std::int64_t k = 1; k < m; ++k) {
    (legendre(k, p) == 1 ? residues : nonresidues).add(unit_root(k, m));
  }
  return {residues.value(), nonresidues.value()};
}

PeriodSumResult fbar(std::int64_t a) {
  require_period_argument(a);
  const std::int64_t m = abs64(a);

  PeriodSumResult result{};
  result.a = a;
  CompensatedSum sum;
  if (mod4(a) == 1) {
    // For either sign (a/n) = (n/|a|) here, so the period runs over the
    // residues n mod |a|. The n = |a| term vanishes unless |a| = 1.
    result.nome = Nome::q;
    result.period = m;
    for (std::int64_t n = 1; n <= m; ++n) {
      const int c = kronecker(n, m);
      if (c == 0) continue;
      result.terms.push_back({n, c});
      sum.add(static_cast<double>(c) * unit_root(n, m));
    }
  } else {
    // a = 2, 3 (mod 4): q1 = exp(pi i / 2|a|), coefficients (a/n) for
    // (n, 4a) = 1, one period is n < 2|a|.
    result.nome = Nome::q1;
    result.period = 2 * m;
    for (std::int64_t n = 1; n < 2 * m; ++n) {
      if (!q1_admissible(n, a)) continue;
      const int c = kronecker(a, n);
      result.terms.push_back({n, c});
      sum.add(static_cast<double>(c) * unit_root(n, 4 * m));
    }
  }
  result.value = sum.value();
  if (has_closed_form(a)) {
    const double root = std::sqrt(static_cast<double>(m));
    result.closed_form = a > 0 ? ComplexVal{root, 0.0} : ComplexVal{0.0, root};
  }
  return result;
}

ComplexVal fbar_via_index_map(std::int64_t a) {
  if (a % 2 == 0 || mod4(a) != 3) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "index-map form needs odd a = 3 mod 4, got " + std::to_string(a));
  }
  const std::int64_t m = abs64(a);
  if (m < 3 || m > kMaxPeriodArgument) {
    throw DomainError(ErrorCode::OutOfRange,
                      "index-map form needs 3 <= |a| <= 10^4, got " + std::to_string(a));
  }
  CompensatedSum sum;
  for (std::int64_t k = 1; k < m; ++k) {
    sum.add(static_cast<double>(kronecker(k, m)) * unit_root(k, m));
  }
  const ComplexVal factor = a > 0 ? ComplexVal{0.0, -1.0} : ComplexVal{0.0, 1.0};
  return factor * sum.value();
}

ComplexVal quad_exp_sum(std::int64_t a) {
  if (a == 0 || mod4(a) != 2) {
    throw DomainError(ErrorCode::UnsupportedCongruenceClass,
                      "quadratic exponential sum needs a = 2 mod 4, got " +
                          std::to_string(a));
  }
  const std::int64_t m = abs64(a);
  if (m > kMaxPeriodArgument) {
    throw DomainError(ErrorCode::OutOfRange,
                      "|a| = " + std::to_string(m) + " exceeds 10^4");
  }
  CompensatedSum sum;
  for (std::int64_t n = 0; n < 2 * m; ++n) {
    sum.add(unit_root(n * n % (4 * m), 4 * m));
  }
  const ComplexVal prefactor =
      (a > 0 ? ComplexVal{1.0, 0.0} : ComplexVal{0.0, 1.0}) / ComplexVal{1.0, 1.0};
  return prefactor * sum.value();
}

std::vector<ComplexVal> partial_f(std::int64_t a, const RationalTau& tau,
                                  std::int64_t num_periods) {
  require_period_argument(a);
  const std::int64_t m = abs64(a);
  if (tau != RationalTau(1, m)) {
    throw DomainError(ErrorCode::UnsupportedTau,
                      "period extraction needs tau = 1/" + std::to_string(m) +
                          ", got " + std::to_string(tau.num()) + "/" +
                          std::to_string(tau.den()));
  }
  if (num_periods < 1) {
    throw DomainError(ErrorCode::OutOfRange, "num_periods must be positive");
  }

  // The defining series uses (a/n) directly; at tau = 1/|a| the phase of
  // q^n is exp(2 pi i n / |a|) and that of q1^n is exp(2 pi i n / 4|a|).
  const bool use_q = mod4(a) == 1;
  const std::int64_t block = use_q ? m : 2 * m;
  const std::int64_t phase_modulus = use_q ? m : 4 * m;

  std::vector<ComplexVal> blocks;
  blocks.reserve(static_cast<std::size_t>(num_periods));
  for (std::int64_t k = 0; k < num_periods; ++k) {
    CompensatedSum sum;
    for (std::int64_t n = k * block + 1; n <= (k + 1) * block; ++n) {
      if (!use_q && !q1_admissible(n, a)) continue;
      const int c = kronecker(a, n);
      if (c == 0) continue;
      sum.add(static_cast<double>(c) * unit_root(n, phase_modulus));
    }
    blocks.push_back(sum.value());
  }
  return blocks;
}

ThetaPartial theta_series(double tau_im, double tau_re, std::int64_t terms) {
  if (!(tau_im > 0.0)) {
    throw DomainError(ErrorCode::NonConvergentTau,
                      "Im tau must be positive, got " + std::to_string(tau_im));
  }
  if (terms < 0) {
    throw DomainError(ErrorCode::OutOfRange, "terms must be non-negative");
  }
  CompensatedSum tail;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    // exp(2 pi i n^2 tau); only the fractional part of n^2 Re(tau) matters.
    const double turns = n2 * tau_re - std::floor(n2 * tau_re);
    const double radius = std::exp(-kTwoPi * n2 * tau_im);
    tail.add(std::polar(radius, kTwoPi * turns));
  }
  const ComplexVal s = tail.value();
  return {1.0 + s, 1.0 + 2.0 * s};
}

ComplexVal character_series_partial(const PrimeModulus& p, double tau_im,
                                    double tau_re, std::int64_t terms) {
  if (!(tau_im > 0.0)) {
    throw DomainError(ErrorCode::NonConvergentTau,
                      "Im tau must be positive, got " + std::to_string(tau_im));
  }
  CompensatedSum sum;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const int c = legendre(n, p);
    if (c == 0) continue;
    const double nd = static_cast<double>(n);
    const double turns = nd * tau_re - std::floor(nd * tau_re);
    sum.add(static_cast<double>(c) * std::polar(std::exp(-kTwoPi * nd * tau_im),
                                                kTwoPi * turns));
  }
  return sum.value();
}

}  // namespace conicmod

// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "conicmod/modarith.hpp"

#include <array>
#include <string>

#include "conicmod/error.hpp"

namespace conicmod {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Witness test for odd n > 2 with n - 1 = d * 2^s.
bool passes_base(std::uint64_t n, std::uint64_t d, int s, std::uint64_t base) {
  std::uint64_t x = powmod64(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  // The first twelve primes form a witness set valid for all n < 3.3 * 10^24.
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t base : kBases) {
    if (!passes_base(n, d, s, base)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p > kMaxModulus) {
    throw DomainError(ErrorCode::ModulusTooLarge,
                      "modulus " + std::to_string(p) + " exceeds 2^61");
  }
  if (!is_prime(p)) {
    throw DomainError(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

Residue PrimeModulus::reduce(std::int64_t a) const noexcept {
  if (a >= 0) return static_cast<std::uint64_t>(a) % p_;
  // -(a + 1) avoids overflow at INT64_MIN.
  std::uint64_t magnitude = static_cast<std::uint64_t>(-(a + 1)) + 1;
  std::uint64_t r = magnitude % p_;
  return r == 0 ? 0 : p_ - r;
}

void require_odd(const PrimeModulus& p, const char* where) {
  if (!p.is_odd()) {
    throw DomainError(ErrorCode::EvenModulus,
                      std::string(where) + " requires an odd prime");
  }
}

Residue mod_add(Residue x, Residue y, const PrimeModulus& p) noexcept {
  // x, y < 2^61 so the sum cannot wrap.
  Residue s = x + y;
  return s >= p.value() ? s - p.value() : s;
}

Residue mod_sub(Residue x, Residue y, const PrimeModulus& p) noexcept {
  return x >= y ? x - y : x + p.value() - y;
}

Residue mod_mul(Residue x, Residue y, const PrimeModulus& p) noexcept {
  return mulmod64(x, y, p.value());
}

Residue mod_neg(Residue x, const PrimeModulus& p) noexcept {
  return x == 0 ? 0 : p.value() - x;
}

Residue mod_pow(Residue base, std::uint64_t exp, const PrimeModulus& p) {
  return powmod64(base, exp, p.value());
}

Residue mod_inv(Residue x, const PrimeModulus& p) {
  x %= p.value();
  if (x == 0) {
    throw DomainError(ErrorCode::NotInvertible,
                      "0 has no inverse mod " + std::to_string(p.value()));
  }
  return mod_pow(x, p.value() - 2, p);
}

std::optional<Residue> sqrt_mod(Residue x, const PrimeModulus& p) {
  const std::uint64_t q = p.value();
  x %= q;
  if (x == 0 || q == 2) return x;
  if (q <= kOracleScale) {
    for (Residue s = 1; s < q; ++s) {
      if (mod_mul(s, s, p) == x) return s;
    }
    return std::nullopt;
  }
  if (mod_pow(x, (q - 1) / 2, p) != 1) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t odd = q - 1;
  int twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  Residue z = 2;
  while (mod_pow(z, (q - 1) / 2, p) != q - 1) ++z;

  Residue c = mod_pow(z, odd, p);
  Residue t = mod_pow(x, odd, p);
  Residue r = mod_pow(x, (odd + 1) / 2, p);
  int m = twos;
  while (t != 1) {
    int i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mod_mul(t2, t2, p);
      ++i;
    }
    Residue b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mod_mul(b, b, p);
    r = mod_mul(r, b, p);
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    m = i;
  }
  return r;
}

Fp2Elem::Fp2Elem(Residue u, Residue v, Residue d, PrimeModulus p)
    : u_(u % p.value()), v_(v % p.value()), d_(d % p.value()), p_(p) {}

Fp2Elem Fp2Elem::conjugate() const { return {u_, mod_neg(v_, p_), d_, p_}; }

Fp2Elem fp2_mul(const Fp2Elem& x, const Fp2Elem& y) {
  if (x.modulus() != y.modulus() || x.d() != y.d()) {
    throw DomainError(ErrorCode::BasisMismatch,
                      "operands live in different extensions");
  }
  const PrimeModulus& p = x.modulus();
  Residue u = mod_add(mod_mul(x.u(), y.u(), p),
                      mod_mul(mod_mul(x.v(), y.v(), p), x.d(), p), p);
  Residue v = mod_add(mod_mul(x.u(), y.v(), p), mod_mul(y.u(), x.v(), p), p);
  return {u, v, x.d(), p};
}

Fp2Elem fp2_pow(const Fp2Elem& x, std::uint64_t exp) {
  Fp2Elem result = Fp2Elem::one(x.d(), x.modulus());
  Fp2Elem base = x;
  while (exp != 0) {
    if (exp & 1) result = fp2_mul(result, base);
    base = fp2_mul(base, base);
    exp >>= 1;
  }
  return result;
}

}  // namespace conicmod

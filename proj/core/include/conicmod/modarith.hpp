// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <optional>

namespace conicmod {

using Residue = std::uint64_t;

/// Largest modulus accepted anywhere in the library.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

/// Bound below which brute-force enumeration is permitted.
inline constexpr std::uint64_t kOracleScale = 10'000;

/// Deterministic Miller-Rabin for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// A prime modulus p <= 2^61. Construction verifies primality, so holding a
/// PrimeModulus is proof that the value is prime. p = 2 is representable;
/// operations that need an odd prime reject it with EvenModulus.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  bool is_odd() const noexcept { return p_ != 2; }

  /// Reduce any signed integer into [0, p).
  Residue reduce(std::int64_t a) const noexcept;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

/// Throws EvenModulus when p = 2.
void require_odd(const PrimeModulus& p, const char* where);

Residue mod_add(Residue x, Residue y, const PrimeModulus& p) noexcept;
Residue mod_sub(Residue x, Residue y, const PrimeModulus& p) noexcept;
Residue mod_mul(Residue x, Residue y, const PrimeModulus& p) noexcept;
Residue mod_neg(Residue x, const PrimeModulus& p) noexcept;

/// base^exp mod p by square-and-multiply; exp = 0 yields 1.
Residue mod_pow(Residue base, std::uint64_t exp, const PrimeModulus& p);

/// Inverse via Fermat's little theorem. Throws NotInvertible for x = 0 mod p.
Residue mod_inv(Residue x, const PrimeModulus& p);

/// Some s with s^2 = x (mod p), or nullopt when x is a nonresidue. Scans
/// exhaustively for p <= 10^4 and falls back to Tonelli-Shanks above that.
std::optional<Residue> sqrt_mod(Residue x, const PrimeModulus& p);

/// u + v*sqrt(d) in F_p[t]/(t^2 - d). When d is a residue mod p the ring is
/// not a field, but multiplication is still well defined.
class Fp2Elem {
 public:
  Fp2Elem(Residue u, Residue v, Residue d, PrimeModulus p);

  static Fp2Elem one(Residue d, PrimeModulus p) { return {1, 0, d, p}; }

  Residue u() const noexcept { return u_; }
  Residue v() const noexcept { return v_; }
  Residue d() const noexcept { return d_; }
  const PrimeModulus& modulus() const noexcept { return p_; }

  bool is_one() const noexcept { return u_ == 1 && v_ == 0; }
  Fp2Elem conjugate() const;

  friend bool operator==(const Fp2Elem&, const Fp2Elem&) = default;

 private:
  Residue u_;
  Residue v_;
  Residue d_;
  PrimeModulus p_;
};

/// Throws BasisMismatch unless x and y share p and d.
Fp2Elem fp2_mul(const Fp2Elem& x, const Fp2Elem& y);
Fp2Elem fp2_pow(const Fp2Elem& x, std::uint64_t exp);

inline Fp2Elem operator*(const Fp2Elem& x, const Fp2Elem& y) {
  return fp2_mul(x, y);
}

}  // namespace conicmod

// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <vector>

#include "conicmod/modarith.hpp"

namespace conicmod {

/// Number of solutions of any of these curves over F_2.
inline constexpr std::int64_t kSolutionsOverF2 = 2;

/// Largest |a| accepted by Curve.
inline constexpr std::int64_t kMaxCoefficient = std::int64_t{1} << 31;

/// The quadratic curve y^2 = a x^2 + 1 over F_p.
class Curve {
 public:
  /// Throws OutOfRange for a = 0 or |a| > 2^31.
  Curve(std::int64_t a, PrimeModulus p);

  std::int64_t a() const noexcept { return a_; }
  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }

  /// a reduced into [0, p).
  Residue a_mod_p() const noexcept { return a_residue_; }
  /// True when p divides a, so the curve collapses to y^2 = 1.
  bool degenerate() const noexcept { return a_residue_ == 0; }

  bool contains(Residue x, Residue y) const noexcept;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::int64_t a_;
  PrimeModulus p_;
  Residue a_residue_;
};

/// A solution (x, y) of a Curve. Membership is checked at construction.
class Point {
 public:
  /// Throws NotOnCurve unless y^2 = a x^2 + 1 (mod p). Coordinates are
  /// reduced mod p first.
  Point(const Curve& curve, Residue x, Residue y);

  /// The unit element (0, 1).
  static Point identity(const Curve& curve) { return {curve, 0, 1}; }

  Residue x() const noexcept { return x_; }
  Residue y() const noexcept { return y_; }
  const Curve& curve() const noexcept { return curve_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& l, const Point& r) noexcept {
    if (auto c = l.x_ <=> r.x_; c != 0) return c;
    return l.y_ <=> r.y_;
  }

 private:
  Curve curve_;
  Residue x_;
  Residue y_;
};

/// m1 x1^2 + m2 x2^2 = n over F_p.
struct GeneralConic {
  std::int64_t m1;
  std::int64_t m2;
  std::int64_t n;
  PrimeModulus p;
};

struct CountResult {
  std::int64_t N;  // solution count
  std::int64_t b;  // p - N

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// All points of the curve sorted lexicographically, found by an explicit
/// y-scan. Throws EvenModulus for p = 2, OracleScaleExceeded for p > 10^4.
std::vector<Point> enumerate_solutions(const Curve& c);

/// N = p - (a/p), or 2p when p | a. Throws EvenModulus for p = 2.
CountResult count_formula(const Curve& c);

/// N = p - (-m1 m2 / p). Throws DegenerateCoefficient when p | m1 m2 n.
CountResult count_general(const GeneralConic& g);

/// N = p + sum_x ((a x^2 + 1)/p).
CountResult char_sum_count(const Curve& c);

/// sum_{b=0}^{p-1} (b(b-n)/p); always -1. Throws DegenerateCoefficient when
/// p | n.
std::int64_t s_sum(std::int64_t n, const PrimeModulus& p);

/// b(p) = -sum_x ((x^3 + k2 x^2 + k1 x + k0)/p) for y^2 = x^3 + k2 x^2 + k1 x + k0
/// (affine points only). Throws OracleScaleExceeded for p > 10^6.
std::int64_t elliptic_b(std::int64_t k2, std::int64_t k1, std::int64_t k0,
                        const PrimeModulus& p);

/// |a| for a = 1 (mod 4), 4|a| for a = 2, 3 (mod 4).
std::int64_t conductor(std::int64_t a);

/// |a| for a = 1 (mod 4), 4|a| for a = 3 (mod 4); a = 0, 2 (mod 4) rejected.
std::int64_t level(std::int64_t a);

}  // namespace conicmod

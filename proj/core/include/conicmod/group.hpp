// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conicmod/conic.hpp"
#include "conicmod/modarith.hpp"

namespace conicmod {

// Group law on the solutions of y^2 = a x^2 + 1:
//
//   (x1, y1) + (x2, y2) = (x1 y2 + y1 x2, y1 y2 + a x1 x2)
//
// with unit (0, 1) and inverse (-x, y). Writing z = y + x sqrt(a) turns the
// law into multiplication, which is what ZEmbedding exposes.

/// Throws CurveMismatch when P and Q lie on different curves.
Point add(const Point& P, const Point& Q);
Point neg(const Point& P);
/// [k]P by double-and-add; [0]P is the identity.
Point scalar_mul(std::uint64_t k, const Point& P);

/// Order of P in the group, found by walking down the divisor lattice of the
/// group order N(p). Throws EvenModulus for p = 2.
std::uint64_t element_order(const Point& P);

/// First point in lexicographic order whose order equals N(p).
/// Throws DegenerateCoefficient when p | a and NotFound if no point has full
/// order.
Point find_generator(const Curve& c);

/// Maps the curve into F_p (when a is a square mod p) or into
/// F_p[sqrt(a)] otherwise.
class ZEmbedding {
 public:
  explicit ZEmbedding(const Curve& curve);

  const Curve& curve() const noexcept { return curve_; }
  bool residue_case() const noexcept { return sqrt_a_.has_value(); }
  /// Square root of a mod p in the residue case.
  std::optional<Residue> sqrt_a() const noexcept { return sqrt_a_; }
  /// Extension basis d = a mod p.
  Residue basis() const noexcept { return curve_.a_mod_p(); }

 private:
  Curve curve_;
  std::optional<Residue> sqrt_a_;
};

/// Residue case: (s x + y) + 0 sqrt(d). Otherwise: y + x sqrt(a).
/// Throws CurveMismatch when P is not on emb.curve().
Fp2Elem z_embed(const Point& P, const ZEmbedding& emb);

struct CyclicityCertificate {
  Curve curve;
  std::uint64_t order;       // N(p)
  Point generator;
  std::vector<Point> chain;  // chain[k - 1] = [k] generator, k = 1..N(p)
};

/// Finds a generator and checks that its multiples hit every solution exactly
/// once. Throws OracleScaleExceeded for p > 10^4; propagates NotFound.
CyclicityCertificate verify_cyclic(const Curve& c);

}  // namespace conicmod

/*
 * Copyright 2026 The gkring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Deterministic finite fields F_{p^N}.
//
// A context is fixed by (p, N): the modulus is the least monic irreducible of
// degree N over F_p, ordering candidates by the coefficient tuple
// (c_0, c_1, ..., c_{N-1}) with c_0 most significant. No embeddings between
// contexts are maintained; subfields are recovered as Frobenius fixed points.
//
// Elements are stored packed as sum_i c_i p^i, so packed order enumerates 0, 1,
// 2, ..., p-1, x, x+1, ... and coefficient vectors are available on demand.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gk::ff {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 22;

struct FieldElement {
  std::uint64_t packed = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FieldCtx {
 public:
  std::uint64_t characteristic() const;
  unsigned degree() const;
  /// p^N.
  std::uint64_t order() const;
  /// c_0 .. c_{N-1} of the monic modulus x^N + c_{N-1} x^{N-1} + ... + c_0.
  const std::vector<std::uint64_t>& modulus() const;
  /// True when multiplication goes through exp/log tables.
  bool has_tables() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Image of the integer c under Z -> F_p.
  FieldElement from_int(std::int64_t c) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.packed < order(); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws InvalidArgument for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b);

 private:
  struct Impl;
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend FieldCtx make_field(std::uint64_t p, unsigned degree);
  friend FieldCtx make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
};

/// The deterministic context for F_{p^N}. Pure in (p, N); contexts are cached
/// and shared. Throws InvalidArgument for non-prime p, N == 0, or p^N >= 2^63.
FieldCtx make_field(std::uint64_t p, unsigned degree);

/// Context for an explicitly supplied modulus (checked for irreducibility).
FieldCtx make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

/// Least d >= 1 with a^(q^d) == a. q must be p^e with e | N.
unsigned frobenius_degree(const FieldCtx& ctx, FieldElement a, std::uint64_t q);

/// All elements in packed order. Throws BoundExceeded when order > limit.
std::vector<FieldElement> enumerate(const FieldCtx& ctx,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// The copy of F_q inside ctx, i.e. the fixed points of a -> a^q, in packed order.
std::vector<FieldElement> subfield_elements(const FieldCtx& ctx, std::uint64_t q);

// Dense univariate polynomials over a context, lowest degree first, with no
// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<FieldElement>;

FieldElement evaluate(const FieldCtx& ctx, const Poly& f, FieldElement x);
bool is_irreducible(const FieldCtx& base, const Poly& f);

/// Least monic irreducible of the given degree over the field `base`, in the
/// same coefficient-tuple order used for field moduli.
Poly least_monic_irreducible(const FieldCtx& base, unsigned degree);

}  // namespace gk::ff

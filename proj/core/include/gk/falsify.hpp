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

// Turns "every positive real measure is a counting measure" into a decision
// procedure: a candidate either agrees with some mu_{F_{q^n}} on the whole
// generated family, or we exhibit a variety class with exactly negative value
// (or, for candidates that are not even ring homomorphisms, the violated
// identity s_a s_b = gcd(a, b) s_lcm(a, b)).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/arith.hpp"
#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace gk::falsify {

/// Listed in witness priority order: classify reports the first that applies.
enum class Construction {
  kHomViolation,
  kOmegaGap,
  kYElimination,
  kCurveFamily,
  kComplementSandwich,
};

std::string_view to_string(Construction c);
/// Throws ParseError for unknown names.
Construction construction_from_string(std::string_view name);

struct Witness {
  Construction construction = Construction::kOmegaGap;
  /// The variety class; absent for kHomViolation and kComplementSandwich.
  std::optional<kring::RingElement> class_expr;
  /// Present for kHomViolation.
  std::optional<kring::HomViolation> violation;
  /// Exact value of class_expr under the candidate (lhs - rhs for a violation).
  Rational value;
  std::string narrative;
};

/// Positivity witnesses must re-evaluate to `value` and be negative; a
/// kHomViolation must still be violated by the candidate.
bool verify_witness(const Witness& witness, const kring::MeasureCandidate& candidate);

/// None iff t == q^n for an integer n >= 1. Otherwise [Omega^n] for the least
/// n >= 1 with t < q^n, whose value prod_{i <= n} (t - q^i) is negative; for
/// t < 0 the affine line itself.
std::optional<Witness> certify_l_gap(std::uint64_t q, const Rational& t);

/// Requires t == q^n and hom-consistency on divisor pairs (PreconditionError
/// otherwise). Returns [Y_{n,m}] for the least m not dividing n with s_m != 0
/// whose value is negative. With s_n = n that value is -c_m * m.
std::optional<Witness> eliminate_nondivisors(std::uint64_t q, std::uint64_t n,
                                             const kring::MeasureCandidate& candidate);

/// Requires t == q^n, hom-consistency, and (when s_n = 0) s_m = 0 for every
/// m > n not dividing n. None when n == 1 or s_n == n; otherwise the class
/// L^2 - q^(2n+1) [X_{(2n)!}], which is negative. Throws BoundExceeded for
/// n > 4, where (2n)! has too many divisors to materialize.
std::optional<Witness> force_top_spec(std::uint64_t q, std::uint64_t n,
                                      const kring::MeasureCandidate& candidate);

/// Per-system result of the orbit/complement check at F_{q^n}.
struct SandwichReport {
  std::uint64_t points = 0;             // |V(F_{q^n})|
  std::uint64_t orbit_sum = 0;          // sum_{d | n} d N_d(V)
  std::uint64_t complement_points = 0;  // |(A^m \ V)(F_{q^n})|
  Integer ambient_points;               // q^(m n)
  bool ok() const;
};

SandwichReport sandwich_report(std::uint64_t q, std::uint64_t n, const geom::PolySystem& system,
                               const geom::EnumerationOptions& options = {});

/// Closed points of degree d | n account for every F_{q^n}-point of V, and V
/// together with its complement fills A^m(F_{q^n}).
bool sandwich_check(std::uint64_t q, std::uint64_t n, const geom::PolySystem& system,
                    const geom::EnumerationOptions& options = {});

/// y^2 = x^3 + x and xy = 1 over F_q.
std::vector<geom::PolySystem> default_probes(std::uint64_t q);

struct ClassifyOptions {
  /// Spec indices 1..limit (and every explicit index) are hom-checked.
  std::uint64_t spec_index_limit = 24;
  /// Systems sandwich-checked once a candidate is accepted. Probes whose
  /// enumeration exceeds enumeration.limit are skipped.
  std::optional<std::vector<geom::PolySystem>> probes;
  geom::EnumerationOptions enumeration;
};

struct Verdict {
  std::optional<std::uint64_t> counting_n;  // set iff accepted
  std::optional<Witness> witness;           // set iff rejected
  std::size_t probes_checked = 0;
  bool is_counting_measure() const { return counting_n.has_value(); }
};

Verdict classify(std::uint64_t q, const kring::MeasureCandidate& candidate,
                 const ClassifyOptions& options = {});

}  // namespace gk::falsify

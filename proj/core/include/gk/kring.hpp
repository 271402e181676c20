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

// The computable fragment of the Grothendieck ring over F_q: integer
// combinations of L^a * S_m, where L = [A^1] and S_m = [Spec F_{q^m}]
// (S_1 is the unit). Products follow the tensor decomposition
//
//   F_{q^m} (x)_{F_q} F_{q^m'} = F_{q^lcm(m,m')}^gcd(m,m'),
//
// so (a, m) * (b, m') = gcd(m, m') * (a + b, lcm(m, m')).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk/arith.hpp"

namespace gk::kring {

struct BasisKey {
  std::uint64_t l_exp = 0;   // power of L
  std::uint64_t spec_m = 1;  // index of S_m
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

class RingElement {
 public:
  explicit RingElement(std::uint64_t q);

  static RingElement constant(std::uint64_t q, const Integer& c);
  static RingElement lefschetz(std::uint64_t q);
  static RingElement lefschetz_power(std::uint64_t q, std::uint64_t a);
  static RingElement spec(std::uint64_t q, std::uint64_t m);
  /// Builds an element from raw terms, dropping zero coefficients.
  static RingElement from_terms(std::uint64_t q, const std::map<BasisKey, Integer>& terms);

  std::uint64_t q() const { return q_; }
  const std::map<BasisKey, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(BasisKey key) const;

  /// Coefficients c_0..c_n when every term is a pure power of L.
  std::optional<std::vector<Integer>> as_l_polynomial() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const Integer& scalar);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator*(const Integer& k, RingElement a) { return a *= k; }
  friend RingElement operator-(RingElement a) { return a *= Integer(-1); }
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  void require_same_q(const RingElement& other) const;
  void add_term(BasisKey key, const Integer& c);

  std::uint64_t q_;
  std::map<BasisKey, Integer> terms_;
};

/// Human-readable form, highest basis key first: "L^2 - 6 L + 8", "2 L S_3".
std::string to_string(const RingElement& x);

/// An exact real-valued assignment: t for L, s_m for S_m. Values of S_m not
/// given explicitly are 0 (except s_1 = 1, which is forced).
class MeasureCandidate {
 public:
  /// Throws InvalidArgument if s contains m = 0 or s_1 != 1.
  explicit MeasureCandidate(Rational t, std::map<std::uint64_t, Rational> s = {});

  const Rational& t() const { return t_; }
  Rational s(std::uint64_t m) const;
  /// The explicitly stored values (always includes m = 1).
  const std::map<std::uint64_t, Rational>& explicit_values() const { return s_; }
  /// Largest m with an explicit value.
  std::uint64_t max_index() const { return s_.rbegin()->first; }

  friend bool operator==(const MeasureCandidate&, const MeasureCandidate&) = default;

 private:
  Rational t_;
  std::map<std::uint64_t, Rational> s_;
};

/// Sum of coeff * t^a * s_m.
Rational evaluate(const RingElement& x, const MeasureCandidate& measure);

// ---------------------------------------------------------------------------
// Counting functions.

/// c_d: closed points of A^1 of degree d, i.e. monic irreducibles of degree d
/// over F_q. c_d = (1/d) sum_{e | d} moebius(d/e) q^e.
Integer closed_point_count(std::uint64_t q, std::uint64_t d);

/// Number of i-dimensional linear subspaces of F_q^n.
Integer gaussian_binomial(std::uint64_t n, std::uint64_t i, std::uint64_t q);

/// a_{n,i} = q^(n-i) * [n choose i]_q rational affine i-planes in A^n.
Integer affine_subspace_count(std::uint64_t q, std::uint64_t n, std::uint64_t i);

// ---------------------------------------------------------------------------
// Omega^n = A^n minus all proper rational affine subspaces.

using LPolynomial = std::vector<Integer>;  // c_0 + c_1 L + ... + c_n L^n

/// P_n from [Omega^n] = L^n - sum_{i=0}^{n-1} a_{n,i} [Omega^i], [Omega^0] = 1.
LPolynomial omega_polynomial_recursive(std::uint64_t q, std::uint64_t n);

/// P_n = (L - q)(L - q^2)...(L - q^n), expanded.
LPolynomial omega_polynomial_product(std::uint64_t q, std::uint64_t n);

/// [Omega^n]; both routes above are computed and must agree exactly
/// (std::logic_error otherwise).
RingElement omega_class(std::uint64_t q, std::uint64_t n);

RingElement from_l_polynomial(std::uint64_t q, const LPolynomial& poly);
Rational evaluate_l_polynomial(const LPolynomial& poly, const Rational& x);

// ---------------------------------------------------------------------------
// Named classes.

RingElement class_affine(std::uint64_t q, std::uint64_t m);
RingElement class_spec(std::uint64_t q, std::uint64_t d);
/// L - sum_{d | k} c_d S_d.
RingElement class_x_k(std::uint64_t q, std::uint64_t k);
/// L - sum_{d | k} c_d S_d - c_m S_m. Throws InvalidArgument if m | k.
RingElement class_y_km(std::uint64_t q, std::uint64_t k, std::uint64_t m);
/// L^2 - q^(2n+1) [X_{(2n)!}]: the plane minus the disjoint open curves
/// y = P(x), deg P <= 2n.
RingElement class_curve_complement(std::uint64_t q, std::uint64_t n);

// ---------------------------------------------------------------------------
// Measures.

/// mu_{F_{q^n}}: t = q^n, s_m = m if m | n, else 0.
MeasureCandidate counting_measure(std::uint64_t q, std::uint64_t n);

/// A failure of s_a * s_b = gcd(a, b) * s_lcm(a, b).
struct HomViolation {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  Rational lhs;  // s_a * s_b
  Rational rhs;  // gcd(a, b) * s_lcm(a, b)
  friend bool operator==(const HomViolation&, const HomViolation&) = default;
};

using IndexPair = std::pair<std::uint64_t, std::uint64_t>;

/// Pairs (a, b) with a | b and b <= bound (includes a == b), ordered by b, then a.
std::vector<IndexPair> divisor_pairs(std::uint64_t bound);
/// All pairs a <= b <= bound.
std::vector<IndexPair> all_pairs(std::uint64_t bound);

std::vector<HomViolation> hom_consistency(const MeasureCandidate& measure,
                                          const std::vector<IndexPair>& pairs);

}  // namespace gk::kring

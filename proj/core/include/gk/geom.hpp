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

// Affine varieties over F_q as polynomial systems, constructible sets built
// from them, and exhaustive point counting over F_{q^n}.
//
// Everything here is deliberately brute force: membership is decided point by
// point by evaluating polynomials and Frobenius degrees. This is the oracle
// side of every symbolic identity in kring.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "gk/arith.hpp"
#include "gk/ff.hpp"

namespace gk::geom {

/// F_q in its canonical representation make_field(p, e). Coefficients of
/// polynomial systems are packed elements of this context.
class BaseField {
 public:
  explicit BaseField(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  PrimePower prime_power() const { return pp_; }
  const ff::FieldCtx& ctx() const { return ctx_; }
  /// All q elements in packed order.
  std::vector<ff::FieldElement> elements() const;

 private:
  std::uint64_t q_;
  PrimePower pp_;
  ff::FieldCtx ctx_;
};

using Exponents = std::vector<unsigned>;

struct Term {
  Exponents exponents;
  ff::FieldElement coeff;
};

/// A polynomial in num_vars variables with coefficients in F_q. Normal form:
/// terms sorted by exponent vector, no zero coefficients, no duplicates.
struct Polynomial {
  std::vector<Term> terms;
  unsigned total_degree() const;
};

class PolySystem {
 public:
  /// Normalizes the polynomials. Throws InvalidArgument when a coefficient is
  /// not an element of F_q or an exponent vector has the wrong length.
  PolySystem(std::uint64_t q, std::size_t num_vars, std::vector<Polynomial> polys);

  std::uint64_t q() const { return q_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& polys() const { return polys_; }

 private:
  std::uint64_t q_;
  std::size_t num_vars_;
  std::vector<Polynomial> polys_;
};

enum class DegreeRelation { kDivides, kNotDivides, kEquals, kNotEquals };

/// A condition on the residue degree over F_q of one coordinate.
struct DegreeCondition {
  DegreeRelation relation = DegreeRelation::kDivides;
  std::uint64_t value = 1;
  bool holds(std::uint64_t degree) const;
};

class ConstructibleSet {
 public:
  enum class Kind { kSystem, kUnion, kIntersection, kDifference, kDegreeFilter, kProduct };

  static ConstructibleSet ambient(std::uint64_t q, std::size_t dim);
  static ConstructibleSet zero_set(PolySystem system);
  static ConstructibleSet unite(std::vector<ConstructibleSet> parts);
  static ConstructibleSet intersect(std::vector<ConstructibleSet> parts);
  static ConstructibleSet difference(ConstructibleSet whole, ConstructibleSet removed);
  /// Keeps points whose coordinate `coord` has residue degree satisfying `cond`.
  static ConstructibleSet degree_filter(ConstructibleSet inner, std::size_t coord,
                                        DegreeCondition cond);
  /// Cartesian product; the ambient dimensions add.
  static ConstructibleSet product(ConstructibleSet left, ConstructibleSet right);
  /// A^m minus the set.
  static ConstructibleSet complement(const ConstructibleSet& set);

  std::uint64_t q() const;
  std::size_t ambient_dim() const;
  Kind kind() const;

  // Valid for kSystem.
  const PolySystem& system() const;
  // Children: union/intersection parts, {whole, removed}, {inner}, {left, right}.
  const std::vector<ConstructibleSet>& children() const;
  // Valid for kDegreeFilter.
  std::size_t filter_coord() const;
  const DegreeCondition& filter_condition() const;

 private:
  struct Node;
  explicit ConstructibleSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Named constructions.

ConstructibleSet affine_space(std::uint64_t q, std::size_t dim);

/// A^n minus every F_q-rational affine hyperplane (every proper rational
/// affine-linear subspace lies in one). omega(q, 0) is the single point.
ConstructibleSet omega(std::uint64_t q, std::size_t n);

/// A^1 minus the closed points whose degree divides k.
ConstructibleSet x_k(std::uint64_t q, std::uint64_t k);

/// X_k minus the closed points of degree m. Throws InvalidArgument if m | k.
ConstructibleSet y_km(std::uint64_t q, std::uint64_t k, std::uint64_t m);

/// Spec F_{q^d}: zero set in A^1 of the least monic irreducible of degree d.
ConstructibleSet spec_point(std::uint64_t q, std::uint64_t d);

/// Graph y = P(x) with x restricted to degrees not dividing exclusion_k.
/// `poly` lists P's coefficients over F_q, lowest degree first.
ConstructibleSet curve_graph(std::uint64_t q, const std::vector<ff::FieldElement>& poly,
                             std::uint64_t exclusion_k);

/// One curve_graph per P of degree <= 2n (q^(2n+1) sets, packed coefficient order).
std::vector<ConstructibleSet> curve_family(std::uint64_t q, std::size_t n,
                                           std::uint64_t exclusion_k);

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumerationOptions {
  /// Maximum number of points (q^(n m)) one enumeration may visit.
  std::uint64_t limit = ff::kDefaultEnumerationLimit;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// A constructible set bound to the field F_{q^n}.
class Evaluator {
 public:
  Evaluator(const ConstructibleSet& set, unsigned n);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  const ff::FieldCtx& field() const;
  std::size_t ambient_dim() const;
  bool contains(std::span<const ff::FieldElement> point) const;
  /// Residue degree over F_q of a single element.
  unsigned degree(ff::FieldElement a) const;
  /// Least d with Frobenius^d fixing every coordinate (1 for the empty tuple).
  unsigned point_degree(std::span<const ff::FieldElement> point) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// |set(F_{q^n})| by exhaustive enumeration. Throws BoundExceeded when
/// q^(n m) > options.limit. The result does not depend on options.workers.
std::uint64_t count_points(const ConstructibleSet& set, unsigned n,
                           const EnumerationOptions& options = {});

/// N_d for 1 <= d <= max_d: the number of closed points of residue degree d.
struct ClosedPointTally {
  std::map<unsigned, std::uint64_t> counts;
  /// sum over d | n of d * N_d. Requires n <= the tally's max degree.
  std::uint64_t orbit_sum(unsigned n) const;
  unsigned max_degree() const;
};

ClosedPointTally decompose_closed_points(const ConstructibleSet& set, unsigned max_d,
                                         const EnumerationOptions& options = {});

/// Same tally restricted to the given degrees (other degrees are absent).
ClosedPointTally decompose_closed_points(const ConstructibleSet& set,
                                         std::span<const unsigned> degrees,
                                         const EnumerationOptions& options = {});

/// True iff {1, x_1, ..., x_n} is linearly independent over F_q, decided by
/// trying every nonzero coefficient tuple in F_q^(n+1).
bool omega_membership(const ff::FieldCtx& field, std::uint64_t q,
                      std::span<const ff::FieldElement> point);

/// True iff no point over F_{q^d}, d in `degrees`, lies in two members.
bool verify_disjoint(const std::vector<ConstructibleSet>& family,
                     std::span<const unsigned> degrees, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Random systems for property campaigns.

struct RandomSystemShape {
  std::size_t max_vars = 3;
  unsigned max_degree = 3;
  std::size_t max_polys = 2;
  std::size_t max_terms = 4;
};

PolySystem random_system(std::uint64_t q, const RandomSystemShape& shape, std::mt19937_64& rng);

}  // namespace gk::geom

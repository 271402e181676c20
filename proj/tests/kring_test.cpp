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

#include "gk/kring.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gk/errors.hpp"
#include "gk/suites.hpp"
#include "oracles.hpp"

namespace gk::kring {
namespace {

RingElement S(std::uint64_t m) { return RingElement::spec(2, m); }
RingElement L() { return RingElement::lefschetz(2); }
RingElement C(long long c) { return RingElement::constant(2, c); }

TEST(RingElement, BasisLaw) {
  EXPECT_EQ(S(3) * S(3), Integer(3) * S(3));
  EXPECT_EQ(S(2) * S(6), Integer(2) * S(6));
  EXPECT_EQ(S(2) * S(3), S(6));
  EXPECT_EQ(S(4) * S(6), Integer(2) * S(12));
  EXPECT_EQ(S(1), C(1));
  EXPECT_EQ((L() * S(2)) * (L() * S(3)), RingElement::lefschetz_power(2, 2) * S(6));
}

TEST(RingElement, MixedFieldsRejected) {
  EXPECT_THROW(RingElement::lefschetz(2) + RingElement::lefschetz(3), InvalidArgument);
}

TEST(RingElement, Printing) {
  EXPECT_EQ(to_string(omega_class(2, 2)), "L^2 - 6 L + 8");
  EXPECT_EQ(to_string(class_x_k(2, 2)), "L - S_2 - 2");
  EXPECT_EQ(to_string(RingElement(2)), "0");
}

// Property: commutative ring axioms on seeded random elements.
TEST(RingElement, AxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = suites::random_ring_element(3, rng);
    const auto b = suites::random_ring_element(3, rng);
    const auto c = suites::random_ring_element(3, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, RingElement(3));
    ASSERT_EQ(a * RingElement::constant(3, 1), a);
  }
}

TEST(ClosedPoints, Values) {
  EXPECT_EQ(closed_point_count(5, 1), 5);
  EXPECT_EQ(closed_point_count(2, 2), 1);
  EXPECT_EQ(closed_point_count(2, 3), 2);
  EXPECT_EQ(closed_point_count(4, 2), 6);
}

TEST(ClosedPoints, MatchIrreducibleCount) {
  for (std::int64_t p : {2, 3, 5}) {
    for (unsigned d = 1; d <= (p == 5 ? 3u : 5u); ++d) {
      EXPECT_EQ(closed_point_count(static_cast<std::uint64_t>(p), d),
                oracle::count_irreducible(p, d))
          << p << " " << d;
    }
  }
}

TEST(AffineSubspaces, MatchEnumeration) {
  EXPECT_EQ(affine_subspace_count(2, 2, 1), 6);
  EXPECT_EQ(affine_subspace_count(2, 2, 0), 4);
  EXPECT_EQ(affine_subspace_count(7, 3, 3), 1);
  for (auto [p, n] : std::vector<std::pair<std::int64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (unsigned i = 0; i <= n; ++i) {
      EXPECT_EQ(affine_subspace_count(static_cast<std::uint64_t>(p), n, i),
                oracle::count_affine_subspaces(p, n, i))
          << p << " " << n << " " << i;
    }
  }
  EXPECT_THROW(affine_subspace_count(2, 2, 3), InvalidArgument);
}

TEST(Omega, Polynomials) {
  EXPECT_EQ(omega_class(5, 1), RingElement::lefschetz(5) - RingElement::constant(5, 5));
  EXPECT_EQ(omega_polynomial_recursive(2, 2), (LPolynomial{8, -6, 1}));
  // Recursion by hand: L^2 - a_{2,1} (L - 2) - a_{2,0}.
  EXPECT_EQ(omega_class(2, 2), L() * L() - Integer(6) * (L() - C(2)) - C(4));
  const auto p2 = omega_polynomial_product(2, 2);
  EXPECT_EQ(evaluate_l_polynomial(p2, 2), 0);
  EXPECT_EQ(evaluate_l_polynomial(p2, 4), 0);
  EXPECT_EQ(omega_polynomial_recursive(3, 0), (LPolynomial{1}));
}

TEST(NamedClasses, Values) {
  EXPECT_EQ(class_x_k(7, 1), RingElement::lefschetz(7) - RingElement::constant(7, 7));
  EXPECT_EQ(class_x_k(2, 2), L() - C(2) - S(2));
  EXPECT_EQ(evaluate(class_x_k(2, 2), counting_measure(2, 3)), 6);
  EXPECT_EQ(class_y_km(2, 1, 2), L() - C(2) - S(2));
  EXPECT_EQ(evaluate(class_y_km(2, 1, 2), counting_measure(2, 1)), 0);
  EXPECT_EQ(evaluate(class_y_km(2, 1, 2), counting_measure(2, 2)), 0);
  EXPECT_THROW(class_y_km(2, 4, 2), InvalidArgument);
}

TEST(Measures, CountingMeasure) {
  const auto mu = counting_measure(2, 2);
  EXPECT_EQ(evaluate(L(), mu), 4);
  EXPECT_EQ(evaluate(S(2), mu), 2);
  EXPECT_EQ(evaluate(S(4), mu), 0);
  EXPECT_EQ(evaluate(omega_class(2, 2), mu), 0);
  EXPECT_THROW(MeasureCandidate(Rational(4), {{1, Rational(2)}}), InvalidArgument);
  EXPECT_THROW(MeasureCandidate(Rational(4), {{0, Rational(0)}}), InvalidArgument);
}

TEST(Measures, HomConsistency) {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    EXPECT_TRUE(hom_consistency(counting_measure(3, n), all_pairs(12)).empty()) << n;
  }
  const MeasureCandidate half(Rational(4), {{2, Rational(1)}});
  const auto v = hom_consistency(half, divisor_pairs(4));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front(), (HomViolation{2, 2, 1, 2}));

  const MeasureCandidate gap(Rational(16), {{2, Rational(0)}, {4, Rational(4)}});
  bool saw_24 = false;
  for (const auto& x : hom_consistency(gap, divisor_pairs(4))) saw_24 |= x.a == 2 && x.b == 4;
  EXPECT_TRUE(saw_24);
}

TEST(Measures, DivisorPairs) {
  EXPECT_EQ(divisor_pairs(4), (std::vector<IndexPair>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3},
                                                      {1, 4}, {2, 4}, {4, 4}}));
  EXPECT_EQ(all_pairs(3).size(), 6u);
}

// Property: every counting measure is a ring homomorphism on random pairs.
TEST(Measures, CountingMeasuresAreHomomorphisms) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t q = i % 2 ? 4 : 3;
    const auto mu = counting_measure(q, 1 + rng() % 6);
    const auto x = suites::random_ring_element(q, rng);
    const auto y = suites::random_ring_element(q, rng);
    ASSERT_EQ(evaluate(x * y, mu), evaluate(x, mu) * evaluate(y, mu));
    ASSERT_EQ(evaluate(x + y, mu), evaluate(x, mu) + evaluate(y, mu));
  }
}

}  // namespace
}  // namespace gk::kring

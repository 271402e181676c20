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

#include "gk/geom.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gk/errors.hpp"

namespace gk::geom {
namespace {

using ff::FieldElement;

Polynomial poly(std::vector<std::pair<Exponents, std::uint64_t>> terms) {
  Polynomial p;
  for (auto& [e, c] : terms) p.terms.push_back({std::move(e), FieldElement{c}});
  return p;
}

TEST(CountPoints, AffineAndOmega) {
  EXPECT_EQ(count_points(affine_space(2, 1), 3), 8u);
  EXPECT_EQ(count_points(affine_space(3, 1), 2), 9u);
  EXPECT_EQ(count_points(omega(2, 2), 2), 0u);
  EXPECT_EQ(count_points(omega(2, 2), 3), 24u);
  EXPECT_EQ(count_points(omega(3, 1), 2), 6u);
  EXPECT_EQ(count_points(omega(2, 0), 1), 1u);
}

TEST(CountPoints, BoundExceeded) {
  EnumerationOptions small;
  small.limit = 1000;
  EXPECT_THROW(count_points(affine_space(2, 2), 5, small), BoundExceeded);
  EXPECT_EQ(count_points(affine_space(2, 2), 4, small), 256u);
}

TEST(OmegaMembership, Examples) {
  const auto f8 = ff::make_field(2, 3);
  const std::vector<FieldElement> origin{{0}, {0}};
  EXPECT_FALSE(omega_membership(f8, 2, origin));
  const FieldElement alpha{2};  // x, a generator of degree 3
  const std::vector<FieldElement> good{alpha, f8.mul(alpha, alpha)};
  EXPECT_TRUE(omega_membership(f8, 2, good));
  const std::vector<FieldElement> rational{alpha, f8.one()};
  EXPECT_FALSE(omega_membership(f8, 2, rational));
}

// Two routes to Omega^n: the hyperplane-union set and the linear
// independence test.
TEST(OmegaMembership, AgreesWithConstruction) {
  for (auto [q, n, d] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 2, 3}, {2, 2, 4}, {3, 2, 3}, {2, 3, 4}, {4, 2, 3}}) {
    const Evaluator ev(omega(q, n), d);
    const auto& f = ev.field();
    const auto elems = ff::enumerate(f);
    std::vector<FieldElement> pt(n);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= elems.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (unsigned i = 0; i < n; ++i) {
        pt[i] = elems[r % elems.size()];
        r /= elems.size();
      }
      ASSERT_EQ(ev.contains(pt), omega_membership(f, q, pt)) << q << " " << n << " " << d;
    }
  }
}

TEST(ClosedPoints, Decompositions) {
  const auto a1 = decompose_closed_points(affine_space(2, 1), 3u);
  EXPECT_EQ(a1.counts, (std::map<unsigned, std::uint64_t>{{1, 2}, {2, 1}, {3, 2}}));
  EXPECT_EQ(decompose_closed_points(affine_space(5, 1), 1u).counts.at(1), 5u);
  const auto x2 = decompose_closed_points(x_k(2, 2), 3u);
  EXPECT_EQ(x2.counts, (std::map<unsigned, std::uint64_t>{{1, 0}, {2, 0}, {3, 2}}));
  // y^2 = x^3 + x over F_2, checked at n = 3.
  const PolySystem curve(2, 2, {poly({{{0, 2}, 1}, {{3, 0}, 1}, {{1, 0}, 1}})});
  const auto v = ConstructibleSet::zero_set(curve);
  EXPECT_EQ(decompose_closed_points(v, 3u).orbit_sum(3), count_points(v, 3));
}

TEST(Curves, Family) {
  const auto fam = curve_family(2, 1, 2);
  ASSERT_EQ(fam.size(), 8u);
  const std::vector<unsigned> degrees{3, 5};
  EXPECT_TRUE(verify_disjoint(fam, degrees));
  EXPECT_TRUE(verify_disjoint(curve_family(3, 1, 2), std::vector<unsigned>{3}));
  auto dup = fam;
  dup.push_back(fam[3]);
  EXPECT_FALSE(verify_disjoint(dup, degrees));
  // Any two members meet nowhere over F_{2^5}.
  EXPECT_EQ(count_points(ConstructibleSet::intersect({fam[1], fam[6]}), 5), 0u);
  // Points over F_2 are excluded outright.
  for (const auto& c : fam) EXPECT_EQ(count_points(c, 1), 0u);
  // Each member is a copy of X_2: q^n - q^gcd(2, n) points.
  EXPECT_EQ(count_points(fam[5], 3), 6u);
  EXPECT_EQ(count_points(fam[5], 4), 12u);
}

TEST(NamedSets, Counts) {
  EXPECT_EQ(count_points(x_k(2, 2), 6), 60u);
  EXPECT_EQ(count_points(y_km(2, 1, 2), 2), 0u);
  EXPECT_EQ(count_points(spec_point(2, 3), 6), 3u);
  EXPECT_EQ(count_points(spec_point(2, 3), 2), 0u);
  EXPECT_THROW(y_km(2, 4, 2), InvalidArgument);
}

TEST(PolySystem, Validation) {
  EXPECT_THROW(PolySystem(2, 2, {poly({{{1}, 1}})}), InvalidArgument);
  EXPECT_THROW(PolySystem(2, 1, {poly({{{1}, 2}})}), InvalidArgument);
  EXPECT_THROW(PolySystem(6, 1, {}), InvalidArgument);
  // Like terms merge and zero terms vanish: x + x = 0 over F_2 leaves the zero polynomial.
  const PolySystem s(2, 1, {poly({{{1}, 1}, {{1}, 1}})});
  EXPECT_EQ(count_points(ConstructibleSet::zero_set(s), 2), 4u);
}

// Property: |A u B| + |A n B| = |A| + |B| and |V| + |A^m \ V| = q^(mn) on
// seeded random systems.
TEST(Properties, InclusionExclusionAndComplement) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const std::uint64_t q = 2 + rng() % 2;
    const auto a_sys = random_system(q, {2, 3, 2, 4}, rng);
    auto b_sys = random_system(q, {2, 3, 2, 4}, rng);
    if (b_sys.num_vars() != a_sys.num_vars()) continue;
    const auto a = ConstructibleSet::zero_set(a_sys);
    const auto b = ConstructibleSet::zero_set(b_sys);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto ua = count_points(ConstructibleSet::unite({a, b}), n);
      const auto ia = count_points(ConstructibleSet::intersect({a, b}), n);
      ASSERT_EQ(ua + ia, count_points(a, n) + count_points(b, n));
      ASSERT_EQ(count_points(ConstructibleSet::difference(a, b), n) + ia, count_points(a, n));
      const auto total = count_points(a, n) + count_points(ConstructibleSet::complement(a), n);
      ASSERT_EQ(Integer(total), ipow(q, n * a_sys.num_vars()));
    }
  }
}

// Property: counts do not depend on how the enumeration is split.
TEST(Properties, WorkerPartitionIndependence) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto v = ConstructibleSet::zero_set(random_system(3, {3, 3, 2, 4}, rng));
    std::vector<std::uint64_t> counts;
    for (unsigned w : {1u, 2u, 3u, 7u, 64u}) {
      EnumerationOptions opt;
      opt.workers = w;
      counts.push_back(count_points(v, 3, opt));
      const auto tally = decompose_closed_points(v, 3u, opt);
      ASSERT_EQ(tally.orbit_sum(3), counts.back());
    }
    for (auto c : counts) ASSERT_EQ(c, counts.front());
  }
}

TEST(Properties, ProductCountsMultiply) {
  const auto a = omega(2, 1);
  const auto b = x_k(2, 2);
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(count_points(ConstructibleSet::product(a, b), n), count_points(a, n) * count_points(b, n));
  }
}

}  // namespace
}  // namespace gk::geom

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

// Test-side reference implementations. These share no code with the library:
// polynomials over F_p are plain coefficient vectors, and counts come from
// exhaustive search.

#include <cstdint>
#include <set>
#include <vector>

namespace gk::oracle {

using Vec = std::vector<std::int64_t>;  // lowest degree first

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec poly_mul(const Vec& a, const Vec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

/// Remainder of a by b (b nonzero).
inline Vec poly_rem(Vec a, const Vec& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t f = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - f * b[i], p);
    trim(a);
  }
  return a;
}

/// Every monic polynomial of degree d over F_p, ordered by (c_0, ..., c_{d-1})
/// with c_0 most significant.
inline std::vector<Vec> monic_polys(std::int64_t p, unsigned d) {
  std::size_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= static_cast<std::size_t>(p);
  std::vector<Vec> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec f(d + 1, 0);
    std::size_t rest = idx;
    for (unsigned i = d; i-- > 0;) {
      f[i] = static_cast<std::int64_t>(rest % p);
      rest /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

/// Irreducible iff no monic factor of degree 1..d/2 divides it.
inline bool irreducible(const Vec& f, std::int64_t p) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; 2 * k <= d; ++k)
    for (const auto& g : monic_polys(p, k))
      if (poly_rem(f, g, p).empty()) return false;
  return d >= 1;
}

inline std::uint64_t count_irreducible(std::int64_t p, unsigned d) {
  std::uint64_t n = 0;
  for (const auto& f : monic_polys(p, d)) n += irreducible(f, p) ? 1 : 0;
  return n;
}

/// Product in F_p[x] / (x^N + modulus), with modulus = c_0..c_{N-1}.
inline Vec field_mul(const Vec& a, const Vec& b, const std::vector<std::uint64_t>& modulus,
                     std::int64_t p) {
  Vec m(modulus.begin(), modulus.end());
  m.push_back(1);
  Vec r = poly_rem(poly_mul(a, b, p), m, p);
  r.resize(modulus.size(), 0);
  return r;
}

/// Number of i-dimensional affine subspaces of F_p^n, p prime, by listing
/// every translate of every span and deduplicating the point sets.
inline std::uint64_t count_affine_subspaces(std::int64_t p, unsigned n, unsigned i) {
  std::size_t points = 1;
  for (unsigned k = 0; k < n; ++k) points *= static_cast<std::size_t>(p);
  auto vec_of = [&](std::size_t idx) {
    Vec v(n);
    for (unsigned k = 0; k < n; ++k) {
      v[k] = static_cast<std::int64_t>(idx % p);
      idx /= p;
    }
    return v;
  };
  auto idx_of = [&](const Vec& v) {
    std::size_t idx = 0;
    for (unsigned k = n; k-- > 0;) idx = idx * p + static_cast<std::size_t>(v[k]);
    return idx;
  };
  std::set<std::set<std::size_t>> flats;
  // Choose i generators (any tuple), keep those spanning dimension i.
  std::size_t tuples = 1;
  for (unsigned k = 0; k < i; ++k) tuples *= points;
  std::size_t combos = 1;
  for (unsigned k = 0; k < i; ++k) combos *= static_cast<std::size_t>(p);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<Vec> gens;
    std::size_t rest = t;
    for (unsigned k = 0; k < i; ++k) {
      gens.push_back(vec_of(rest % points));
      rest /= points;
    }
    std::set<std::size_t> span;
    for (std::size_t c = 0; c < combos; ++c) {
      Vec v(n, 0);
      std::size_t cr = c;
      for (unsigned k = 0; k < i; ++k) {
        const std::int64_t coeff = static_cast<std::int64_t>(cr % p);
        cr /= p;
        for (unsigned j = 0; j < n; ++j) v[j] = mod(v[j] + coeff * gens[k][j], p);
      }
      span.insert(idx_of(v));
    }
    if (span.size() != combos) continue;
    for (std::size_t base = 0; base < points; ++base) {
      const Vec b = vec_of(base);
      std::set<std::size_t> flat;
      for (auto s : span) {
        Vec v = vec_of(s);
        for (unsigned j = 0; j < n; ++j) v[j] = mod(v[j] + b[j], p);
        flat.insert(idx_of(v));
      }
      flats.insert(flat);
    }
  }
  return flats.size();
}

}  // namespace gk::oracle

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

#include "gk/ff.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "gk/arith.hpp"
#include "gk/errors.hpp"

namespace gk::ff {

namespace {

// Fields up to this order get exp/log tables at construction.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 18;
constexpr unsigned kMaxDegree = 63;

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

}  // namespace

struct FieldCtx::Impl {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> place;  // p^i
  std::vector<std::uint32_t> exp;    // doubled: exp[i] for i < 2 (order - 1)
  std::vector<std::uint32_t> log;
  std::uint64_t binary_modulus = 0;  // p = 2: x^n + sum c_i x^i as bits, n < 63

  bool tables() const { return !exp.empty(); }

  void decode(std::uint64_t a, std::uint64_t* digits) const {
    for (unsigned i = 0; i < n; ++i) {
      digits[i] = a % p;
      a /= p;
    }
  }

  std::uint64_t encode(const std::uint64_t* digits) const {
    std::uint64_t a = 0;
    for (unsigned i = 0; i < n; ++i) a += digits[i] * place[i];
    return a;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (p == 2) return a ^ b;
    if (n == 1) {
      const std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * place[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (p == 2) return a;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint64_t d = a % p;
      if (d != 0) r += (p - d) * place[i];
      a /= p;
    }
    return r;
  }

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    if (n == 1) return mulmod(a, b, p);
    if (p == 2) return mul_binary(a, b);
    if (p < (std::uint64_t{1} << 31)) return mul_small(a, b);
    std::array<std::uint64_t, kMaxDegree> da{}, db{};
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    decode(a, da.data());
    decode(b, db.data());
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p)) % p;
      }
    }
    // x^n = -(c_0 + ... + c_{n-1} x^{n-1})
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t t = mulmod(c, modulus[i], p);
        prod[k - n + i] = (prod[k - n + i] + p - t) % p;
      }
    }
    return encode(prod.data());
  }

  // Carry-less product for p = 2, where packed elements are bit vectors.
  std::uint64_t mul_binary(std::uint64_t a, std::uint64_t b) const {
    u128 prod = 0;
    for (; b != 0; b &= b - 1) prod ^= static_cast<u128>(a) << std::countr_zero(b);
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      if ((prod >> k) & 1) prod ^= static_cast<u128>(binary_modulus) << (k - n);
    }
    return static_cast<std::uint64_t>(prod);
  }

  // Coefficient products fit in 64 bits; reduce mod p once per slot.
  std::uint64_t mul_small(std::uint64_t a, std::uint64_t b) const {
    std::array<std::uint64_t, kMaxDegree> da{}, db{};
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    decode(a, da.data());
    decode(b, db.data());
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned i = 0; i < n; ++i) {
        prod[k - n + i] = (prod[k - n + i] + (p - c) * modulus[i]) % p;
      }
    }
    return encode(prod.data());
  }

  std::uint64_t pow_slow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      e >>= 1;
      if (e) a = mul_slow(a, a);
    }
    return r;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!tables()) return mul_slow(a, b);
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    if (!tables()) return pow_slow(a, e);
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t m = order - 1;
    const auto k = static_cast<u128>(log[a]) * (e % m) % m;
    return exp[static_cast<std::size_t>(k)];
  }

  void build_tables() {
    const std::uint64_t m = order - 1;
    const auto factors = prime_factors(m);
    std::uint64_t g = 1;
    for (;; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (pow_slow(g, m / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    exp.resize(2 * m);
    log.assign(order, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      exp[i] = static_cast<std::uint32_t>(cur);
      exp[i + m] = static_cast<std::uint32_t>(cur);
      log[cur] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, g);
    }
  }
};

std::uint64_t FieldCtx::characteristic() const { return impl_->p; }
unsigned FieldCtx::degree() const { return impl_->n; }
std::uint64_t FieldCtx::order() const { return impl_->order; }
const std::vector<std::uint64_t>& FieldCtx::modulus() const { return impl_->modulus; }
bool FieldCtx::has_tables() const { return impl_->tables(); }

FieldElement FieldCtx::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = c % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > impl_->n) {
    throw InvalidArgument("element has " + std::to_string(coeffs.size()) +
                          " coefficients, field degree is " + std::to_string(impl_->n));
  }
  std::uint64_t a = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= impl_->p) throw InvalidArgument("coefficient not reduced mod p");
    a += coeffs[i] * impl_->place[i];
  }
  return {a};
}

std::vector<std::uint64_t> FieldCtx::coeffs(FieldElement a) const {
  std::vector<std::uint64_t> out(impl_->n);
  impl_->decode(a.packed, out.data());
  return out;
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  return {impl_->add(a.packed, b.packed)};
}
FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const {
  return {impl_->add(a.packed, impl_->neg(b.packed))};
}
FieldElement FieldCtx::neg(FieldElement a) const { return {impl_->neg(a.packed)}; }
FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  return {impl_->mul(a.packed, b.packed)};
}
FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  return {impl_->pow(a.packed, e)};
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.packed == 0) throw InvalidArgument("inverse of zero");
  if (impl_->tables()) {
    const std::uint64_t m = impl_->order - 1;
    return {impl_->exp[(m - impl_->log[a.packed]) % m]};
  }
  return {impl_->pow_slow(a.packed, impl_->order - 2)};
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
  return a.impl_ == b.impl_ ||
         (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

// ---------------------------------------------------------------------------
// Polynomials over a context.

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back().packed == 0) f.pop_back();
}

Poly poly_sub(const FieldCtx& k, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), k.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Remainder of a modulo a monic f.
Poly poly_mod_monic(const FieldCtx& k, Poly a, const Poly& f) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const FieldElement c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      a[shift + i] = k.sub(a[shift + i], k.mul(c, f[i]));
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly make_monic(const FieldCtx& k, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const FieldElement inv_lead = k.inv(f.back());
  for (auto& c : f) c = k.mul(c, inv_lead);
  return f;
}

Poly poly_mulmod(const FieldCtx& k, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].packed == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
    }
  }
  return poly_mod_monic(k, std::move(prod), f);
}

Poly poly_powmod(const FieldCtx& k, Poly base, std::uint64_t e, const Poly& f) {
  Poly r{k.one()};
  r = poly_mod_monic(k, r, f);
  base = poly_mod_monic(k, std::move(base), f);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(k, r, base, f);
    e >>= 1;
    if (e) base = poly_mulmod(k, base, base, f);
  }
  return r;
}

Poly poly_gcd(const FieldCtx& k, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(k, std::move(b));
    Poly r = poly_mod_monic(k, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, std::move(a));
}

}  // namespace

FieldElement evaluate(const FieldCtx& ctx, const Poly& f, FieldElement x) {
  FieldElement acc = ctx.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
  return acc;
}

bool is_irreducible(const FieldCtx& base, const Poly& f_in) {
  Poly f = make_monic(base, f_in);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  const Poly x{base.zero(), base.one()};
  Poly h = poly_mod_monic(base, x, f);
  // Ben-Or: no factor of degree k <=> gcd(f, x^(Q^k) - x) == 1.
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    h = poly_powmod(base, h, base.order(), f);
    const Poly g = poly_gcd(base, f, poly_sub(base, h, x));
    if (g.size() > 1) return false;
  }
  return true;
}

Poly least_monic_irreducible(const FieldCtx& base, unsigned degree) {
  if (degree == 0) throw InvalidArgument("irreducible polynomial of degree 0");
  const std::uint64_t q = base.order();
  // digits[i] = packed c_i; c_0 is the most significant position.
  std::vector<std::uint64_t> digits(degree, 0);
  // For degree >= 2 every candidate with c_0 = 0 is divisible by x; they
  // precede all others in this order, so start past them.
  if (degree >= 2) digits[0] = 1;
  for (;;) {
    Poly f(degree + 1);
    for (unsigned i = 0; i < degree; ++i) f[i] = {digits[i]};
    f[degree] = base.one();
    if (is_irreducible(base, f)) return f;
    int i = static_cast<int>(degree) - 1;
    for (; i >= 0; --i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
  }
}

// ---------------------------------------------------------------------------
// Context construction.

namespace {

std::uint64_t field_order(std::uint64_t p, unsigned n) {
  std::uint64_t order = 0;
  try {
    order = checked_pow(p, n);
  } catch (const BoundExceeded&) {
    order = 0;
  }
  if (order == 0 || order >= (std::uint64_t{1} << 63)) {
    throw InvalidArgument("field of order " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds the packed element range");
  }
  return order;
}

}  // namespace

FieldCtx make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.empty()) throw InvalidArgument("modulus must have degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient not reduced mod p");
  }
  auto impl = std::make_shared<FieldCtx::Impl>();
  impl->p = p;
  impl->n = static_cast<unsigned>(modulus.size());
  impl->order = field_order(p, impl->n);
  impl->modulus = std::move(modulus);
  impl->place.resize(impl->n);
  for (unsigned i = 0; i < impl->n; ++i) impl->place[i] = i == 0 ? 1 : impl->place[i - 1] * p;
  if (p == 2) {
    impl->binary_modulus = std::uint64_t{1} << impl->n;
    for (unsigned i = 0; i < impl->n; ++i) impl->binary_modulus |= impl->modulus[i] << i;
  }

  if (impl->n > 1) {
    const FieldCtx prime = make_field(p, 1);
    Poly f(impl->n + 1);
    for (unsigned i = 0; i < impl->n; ++i) f[i] = {impl->modulus[i]};
    f[impl->n] = prime.one();
    if (!is_irreducible(prime, f)) throw InvalidArgument("modulus is reducible over F_p");
    if (impl->order <= kTableLimit) impl->build_tables();
  }
  return FieldCtx(std::move(impl));
}

FieldCtx make_field(std::uint64_t p, unsigned degree) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) throw InvalidArgument("field degree must be >= 1");
  if (degree > kMaxDegree) throw InvalidArgument("field degree too large");
  field_order(p, degree);

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldCtx> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, degree}); it != cache.end()) return it->second;
  }

  std::vector<std::uint64_t> modulus;
  if (degree == 1) {
    modulus = {0};  // x: the prime field with c_0 = element
  } else {
    const FieldCtx prime = make_field(p, 1);
    const Poly f = least_monic_irreducible(prime, degree);
    modulus.reserve(degree);
    for (unsigned i = 0; i < degree; ++i) modulus.push_back(f[i].packed);
  }
  FieldCtx ctx = make_field_with_modulus(p, std::move(modulus));

  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{p, degree}, ctx).first->second;
}

unsigned frobenius_degree(const FieldCtx& ctx, FieldElement a, std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (pp.p != ctx.characteristic()) {
    throw InvalidArgument("q = " + std::to_string(q) + " is not a power of the characteristic");
  }
  if (ctx.degree() % pp.e != 0) {
    throw InvalidArgument("F_" + std::to_string(q) + " is not a subfield of this context");
  }
  const unsigned limit = ctx.degree() / pp.e;
  FieldElement b = a;
  for (unsigned d = 1; d <= limit; ++d) {
    b = ctx.pow(b, q);
    if (b == a) return d;
  }
  throw std::logic_error("Frobenius orbit longer than the field degree");
}

std::vector<FieldElement> enumerate(const FieldCtx& ctx, std::uint64_t limit) {
  if (ctx.order() > limit) {
    throw BoundExceeded("field of order " + std::to_string(ctx.order()) +
                        " exceeds enumeration limit " + std::to_string(limit));
  }
  std::vector<FieldElement> out(ctx.order());
  for (std::uint64_t i = 0; i < ctx.order(); ++i) out[i] = {i};
  return out;
}

std::vector<FieldElement> subfield_elements(const FieldCtx& ctx, std::uint64_t q) {
  const PrimePower pp = prime_power(q);
  if (pp.p != ctx.characteristic() || ctx.degree() % pp.e != 0) {
    throw InvalidArgument("F_" + std::to_string(q) + " is not a subfield of this context");
  }
  if (pp.e == ctx.degree()) return enumerate(ctx, ctx.order());
  // Nonzero fixed points of a -> a^q form the subgroup of order q - 1,
  // generated by g^((order - 1) / (q - 1)) for a primitive g.
  const std::uint64_t m = ctx.order() - 1;
  const auto factors = prime_factors(m);
  FieldElement g{1};
  for (std::uint64_t a = 1; a < ctx.order(); ++a) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
      return ctx.pow({a}, m / r) != ctx.one();
    });
    if (primitive) {
      g = {a};
      break;
    }
  }
  const FieldElement h = ctx.pow(g, m / (q - 1));
  std::vector<FieldElement> out{ctx.zero()};
  FieldElement cur = ctx.one();
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    out.push_back(cur);
    cur = ctx.mul(cur, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gk::ff

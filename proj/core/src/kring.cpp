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

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gk/errors.hpp"

namespace gk::kring {

RingElement::RingElement(std::uint64_t q) : q_(q) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

RingElement RingElement::constant(std::uint64_t q, const Integer& c) {
  RingElement r(q);
  r.add_term({0, 1}, c);
  return r;
}

RingElement RingElement::lefschetz(std::uint64_t q) { return lefschetz_power(q, 1); }

RingElement RingElement::lefschetz_power(std::uint64_t q, std::uint64_t a) {
  RingElement r(q);
  r.add_term({a, 1}, 1);
  return r;
}

RingElement RingElement::spec(std::uint64_t q, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("Spec index must be >= 1");
  RingElement r(q);
  r.add_term({0, m}, 1);
  return r;
}

RingElement RingElement::from_terms(std::uint64_t q, const std::map<BasisKey, Integer>& terms) {
  RingElement r(q);
  for (const auto& [key, c] : terms) {
    if (key.spec_m == 0) throw InvalidArgument("Spec index must be >= 1");
    r.add_term(key, c);
  }
  return r;
}

Integer RingElement::coeff(BasisKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<std::vector<Integer>> RingElement::as_l_polynomial() const {
  std::vector<Integer> out;
  for (const auto& [key, c] : terms_) {
    if (key.spec_m != 1) return std::nullopt;
    if (out.size() <= key.l_exp) out.resize(key.l_exp + 1, 0);
    out[key.l_exp] = c;
  }
  return out;
}

void RingElement::require_same_q(const RingElement& other) const {
  if (q_ != other.q_) {
    throw InvalidArgument("ring elements over F_" + std::to_string(q_) + " and F_" +
                          std::to_string(other.q_));
  }
}

void RingElement::add_term(BasisKey key, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_q(other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_q(other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_q(other);
  RingElement out(q_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      const std::uint64_t g = std::gcd(ka.spec_m, kb.spec_m);
      out.add_term({ka.l_exp + kb.l_exp, lcm_u64(ka.spec_m, kb.spec_m)}, ca * cb * g);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RingElement& RingElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

MeasureCandidate::MeasureCandidate(Rational t, std::map<std::uint64_t, Rational> s)
    : t_(std::move(t)), s_(std::move(s)) {
  if (s_.count(0)) throw InvalidArgument("Spec index must be >= 1");
  auto it = s_.find(1);
  if (it != s_.end() && it->second != 1) {
    throw InvalidArgument("s_1 must equal 1 (a ring homomorphism preserves the unit)");
  }
  s_[1] = 1;
}

Rational MeasureCandidate::s(std::uint64_t m) const {
  auto it = s_.find(m);
  return it == s_.end() ? Rational(0) : it->second;
}

Rational evaluate(const RingElement& x, const MeasureCandidate& measure) {
  Rational total = 0;
  std::map<std::uint64_t, Rational> powers;
  for (const auto& [key, c] : x.terms()) {
    const Rational s = measure.s(key.spec_m);
    if (s == 0) continue;
    auto it = powers.find(key.l_exp);
    if (it == powers.end()) it = powers.emplace(key.l_exp, rpow(measure.t(), key.l_exp)).first;
    total += Rational(c) * it->second * s;
  }
  return total;
}

// ---------------------------------------------------------------------------

Integer closed_point_count(std::uint64_t q, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("closed_point_count needs d >= 1");
  Integer sum = 0;
  for (auto e : divisors(d)) {
    const int mu = moebius(d / e);
    if (mu != 0) sum += mu * ipow(q, e);
  }
  if (sum % d != 0) throw std::logic_error("necklace sum not divisible by d");
  return sum / d;
}

Integer gaussian_binomial(std::uint64_t n, std::uint64_t i, std::uint64_t q) {
  if (i > n) return 0;
  Integer num = 1, den = 1;
  for (std::uint64_t j = 0; j < i; ++j) {
    num *= ipow(q, n - j) - 1;
    den *= ipow(q, j + 1) - 1;
  }
  return num / den;
}

Integer affine_subspace_count(std::uint64_t q, std::uint64_t n, std::uint64_t i) {
  if (i > n) {
    throw InvalidArgument("affine subspace dimension " + std::to_string(i) + " exceeds " +
                          std::to_string(n));
  }
  return ipow(q, n - i) * gaussian_binomial(n, i, q);
}

LPolynomial omega_polynomial_recursive(std::uint64_t q, std::uint64_t n) {
  std::vector<LPolynomial> omega{{1}};
  for (std::uint64_t k = 1; k <= n; ++k) {
    LPolynomial p(k + 1, 0);
    p[k] = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      const Integer a = affine_subspace_count(q, k, i);
      for (std::size_t j = 0; j < omega[i].size(); ++j) p[j] -= a * omega[i][j];
    }
    omega.push_back(std::move(p));
  }
  return omega[n];
}

LPolynomial omega_polynomial_product(std::uint64_t q, std::uint64_t n) {
  LPolynomial p{1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    const Integer root = ipow(q, i);
    LPolynomial next(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] -= root * p[j];
    }
    p = std::move(next);
  }
  return p;
}

RingElement from_l_polynomial(std::uint64_t q, const LPolynomial& poly) {
  std::map<BasisKey, Integer> terms;
  for (std::size_t j = 0; j < poly.size(); ++j) terms[{j, 1}] = poly[j];
  return RingElement::from_terms(q, terms);
}

RingElement omega_class(std::uint64_t q, std::uint64_t n) {
  const LPolynomial rec = omega_polynomial_recursive(q, n);
  const LPolynomial prod = omega_polynomial_product(q, n);
  if (rec != prod) {
    throw std::logic_error("Omega recursion disagrees with the product formula");
  }
  return from_l_polynomial(q, rec);
}

Rational evaluate_l_polynomial(const LPolynomial& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

RingElement class_affine(std::uint64_t q, std::uint64_t m) {
  return RingElement::lefschetz_power(q, m);
}

RingElement class_spec(std::uint64_t q, std::uint64_t d) { return RingElement::spec(q, d); }

RingElement class_x_k(std::uint64_t q, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("X_k needs k >= 1");
  RingElement x = RingElement::lefschetz(q);
  for (auto d : divisors(k)) x -= closed_point_count(q, d) * RingElement::spec(q, d);
  return x;
}

RingElement class_y_km(std::uint64_t q, std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("Y_{k,m} needs m >= 1");
  if (k % m == 0) throw InvalidArgument("Y_{k,m} needs m not dividing k");
  return class_x_k(q, k) - closed_point_count(q, m) * RingElement::spec(q, m);
}

RingElement class_curve_complement(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("curve family needs n >= 1");
  const Integer k = factorial(2 * n);
  if (k > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw BoundExceeded("(2n)! overflows 64 bits");
  }
  return RingElement::lefschetz_power(q, 2) -
         ipow(q, 2 * n + 1) * class_x_k(q, static_cast<std::uint64_t>(k));
}

MeasureCandidate counting_measure(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("counting measure needs n >= 1");
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  std::map<std::uint64_t, Rational> s;
  for (auto d : divisors(n)) s[d] = Rational(d);
  return MeasureCandidate(Rational(ipow(q, n)), std::move(s));
}

std::vector<IndexPair> divisor_pairs(std::uint64_t bound) {
  std::vector<IndexPair> out;
  for (std::uint64_t b = 1; b <= bound; ++b) {
    for (auto a : divisors(b)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<IndexPair> all_pairs(std::uint64_t bound) {
  std::vector<IndexPair> out;
  for (std::uint64_t a = 1; a <= bound; ++a) {
    for (std::uint64_t b = a; b <= bound; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<HomViolation> hom_consistency(const MeasureCandidate& measure,
                                          const std::vector<IndexPair>& pairs) {
  std::vector<HomViolation> out;
  for (auto [a, b] : pairs) {
    if (a == 0 || b == 0) throw InvalidArgument("Spec index must be >= 1");
    const Rational lhs = measure.s(a) * measure.s(b);
    const Rational rhs = Rational(std::gcd(a, b)) * measure.s(lcm_u64(a, b));
    if (lhs != rhs) out.push_back({a, b, lhs, rhs});
  }
  return out;
}

std::string to_string(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    const bool first = out.empty();
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Integer mag = c < 0 ? Integer(-c) : c;
    std::string mono;
    if (key.l_exp == 1) mono = "L";
    if (key.l_exp > 1) mono = "L^" + std::to_string(key.l_exp);
    if (key.spec_m > 1) mono += (mono.empty() ? "" : " ") + ("S_" + std::to_string(key.spec_m));
    if (mono.empty()) out += gk::to_string(mag);
    else if (mag == 1) out += mono;
    else out += gk::to_string(mag) + " " + mono;
  }
  return out;
}

}  // namespace gk::kring

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

// Integer and rational plumbing shared by every module: exact big numbers,
// prime powers, divisors and the Moebius function.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q = p^e with p prime and e >= 1.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

/// Throws InvalidArgument unless q is a prime power >= 2.
PrimePower prime_power(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n in increasing order. n must be positive.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int moebius(std::uint64_t n);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Exact base^exp.
Integer ipow(std::uint64_t base, std::uint64_t exp);
Rational rpow(const Rational& base, std::uint64_t exp);

/// base^exp if it fits in 64 bits, otherwise throws BoundExceeded.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

Integer factorial(std::uint64_t n);

/// "num/den" or "num" (den == 1). Always in lowest terms.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "a", "-a", "a/b"; throws ParseError on anything else or b == 0.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

/// If r == base^n for an integer n >= 0, returns n; otherwise -1.
long exact_log(const Rational& r, std::uint64_t base);

}  // namespace gk

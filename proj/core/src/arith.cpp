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

#include "gk/arith.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "gk/errors.hpp"

namespace gk {

std::uint64_t PrimePower::q() const { return checked_pow(p, e); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimePower prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power >= 2, got " + std::to_string(q));
  auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
  }
  PrimePower pp{factors.front(), 0};
  while (q > 1) {
    q /= pp.p;
    ++pp.e;
  }
  return pp;
}

bool is_prime_power(std::uint64_t q) { return q >= 2 && prime_factors(q).size() == 1; }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("divisors of 0");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("moebius(0)");
  int sign = 1;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t a_red = a / g;
  if (b != 0 && a_red > std::numeric_limits<std::uint64_t>::max() / b) {
    throw BoundExceeded("lcm overflows 64 bits");
  }
  return a_red * b;
}

Integer ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exp));
}

Rational rpow(const Rational& base, std::uint64_t exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BoundExceeded(std::to_string(base) + "^" + std::to_string(exp) +
                          " overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

Integer factorial(std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer decimal(const std::string& s) {
  if (!is_decimal(s)) throw ParseError("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Integer parse_integer(const std::string& text) { return decimal(text); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(decimal(text));
  const Integer num = decimal(text.substr(0, slash));
  const std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw ParseError("negative denominator: '" + text + "'");
  const Integer den = decimal(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + text + "'");
  return Rational(num, den);
}

long exact_log(const Rational& r, std::uint64_t base) {
  if (base < 2 || r <= 0 || boost::multiprecision::denominator(r) != 1) return -1;
  Integer v = boost::multiprecision::numerator(r);
  long n = 0;
  while (v > 1) {
    if (v % base != 0) return -1;
    v /= base;
    ++n;
  }
  return n;
}

}  // namespace gk

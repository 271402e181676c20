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

#include "gk/suites.hpp"

#include <numeric>
#include <sstream>

#include "gk/builtins.hpp"
#include "gk/errors.hpp"
#include "gk/falsify.hpp"

namespace gk::suites {

namespace {

using kring::MeasureCandidate;
using kring::RingElement;

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    if (!ok) {
      report_.passed = false;
      report_.lines.push_back("FAIL " + what);
    }
  }
  void note(const std::string& line) { report_.lines.push_back(line); }
  SuiteReport finish(const std::string& summary) {
    report_.lines.push_back((report_.passed ? "PASS " : "FAIL ") + report_.name + ": " + summary);
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

SuiteReport omega_identity() {
  Recorder r("omega-identity");
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      r.check(kring::omega_polynomial_recursive(q, n) == kring::omega_polynomial_product(q, n),
              "recursion != product at q=" + str(q) + " n=" + str(n));
    }
  }
  return r.finish("recursion equals (L-q)...(L-q^n) for q in {2,3,4,5}, n <= 4");
}

SuiteReport omega_emptiness(const geom::EnumerationOptions& opt) {
  Recorder r("omega-emptiness");
  const std::uint64_t q = 2;
  for (std::uint64_t n = 1; n <= 3; ++n) {
    const auto set = geom::omega(q, n);
    const auto poly = kring::omega_polynomial_product(q, n);
    for (unsigned d = 1; d <= 5; ++d) {
      const auto count = geom::count_points(set, d, opt);
      const Rational expected = kring::evaluate_l_polynomial(poly, Rational(ipow(q, d)));
      r.check(Rational(count) == expected, "|Omega^" + str(n) + "(F_{2^" + str(d) + "})| = " +
                                               str(count) + ", P_n(q^d) = " + to_string(expected));
      if (d <= n) r.check(count == 0, "Omega^" + str(n) + " has points over F_{2^" + str(d) + "}");
    }
  }
  return r.finish("Omega^n(F_{q^d}) empty for d <= n and equal to P_n(q^d) for d <= 5, q = 2");
}

SuiteReport divisor_sum() {
  Recorder r("divisor-sum");
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::uint64_t k = 1; k <= 12; ++k) {
      Integer sum = 0;
      for (auto d : divisors(k)) sum += d * kring::closed_point_count(q, d);
      r.check(sum == ipow(q, k), "sum_{d|k} d c_d != q^k at q=" + str(q) + " k=" + str(k));
      if (k > 1) {
        r.check(k * kring::closed_point_count(q, k) <= ipow(q, k) - 1,
                "k c_k > q^k - 1 at q=" + str(q) + " k=" + str(k));
      }
    }
  }
  return r.finish("sum_{d|k} d c_d = q^k and d c_d <= q^d - 1 for k <= 12, q in {2,3,4,5}");
}

SuiteReport x_law(const geom::EnumerationOptions& opt) {
  Recorder r("x-law");
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const auto cls = kring::class_x_k(q, k);
      const auto set = geom::x_k(q, k);
      for (std::uint64_t n = 1; n <= 5; ++n) {
        const Rational symbolic = kring::evaluate(cls, kring::counting_measure(q, n));
        const auto counted = geom::count_points(set, static_cast<unsigned>(n), opt);
        const Integer closed = ipow(q, n) - ipow(q, std::gcd(k, n));
        r.check(symbolic == Rational(counted) && Integer(counted) == closed,
                "X_" + str(k) + " at q=" + str(q) + " n=" + str(n));
      }
    }
  }
  return r.finish("mu_n(X_k) = |X_k(F_{q^n})| = q^n - q^gcd(k,n) for q in {2,3}, k <= 4, n <= 5");
}

SuiteReport hom(std::uint64_t seed, const geom::EnumerationOptions& opt) {
  Recorder r("hom");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t q = std::array<std::uint64_t, 4>{2, 3, 4, 5}[draw(rng, 4)];
    const std::uint64_t n = 1 + draw(rng, 6);
    const auto mu = kring::counting_measure(q, n);
    const auto x = random_ring_element(q, rng);
    const auto y = random_ring_element(q, rng);
    const Rational ex = kring::evaluate(x, mu), ey = kring::evaluate(y, mu);
    r.check(kring::evaluate(x + y, mu) == ex + ey, "additivity, pair " + std::to_string(i));
    r.check(kring::evaluate(x * y, mu) == ex * ey, "multiplicativity, pair " + std::to_string(i));
  }
  for (std::uint64_t a = 1; a <= 4; ++a) {
    for (std::uint64_t b = 1; b <= 4; ++b) {
      const auto cls = kring::class_spec(2, a) * kring::class_spec(2, b);
      const auto set = geom::ConstructibleSet::product(geom::spec_point(2, a), geom::spec_point(2, b));
      for (unsigned n = 1; n <= 6; ++n) {
        r.check(kring::evaluate(cls, kring::counting_measure(2, n)) ==
                    Rational(geom::count_points(set, n, opt)),
                "S_" + str(a) + " S_" + str(b) + " vs Spec x Spec at n=" + str(n));
      }
    }
  }
  return r.finish("counting measures are additive and multiplicative on 1000 random pairs; "
                  "S_a S_b = gcd S_lcm matches enumeration for a, b <= 4, n <= 6");
}

SuiteReport orbit_identity(std::uint64_t seed, const geom::EnumerationOptions& opt) {
  Recorder r("orbit-identity");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t q = 2 + draw(rng, 2);
    const auto sys = geom::random_system(q, {3, 3, 2, 4}, rng);
    const auto v = geom::ConstructibleSet::zero_set(sys);
    const auto w = geom::ConstructibleSet::complement(v);
    // Keep q^(n m) at desk scale: 3 variables over F_{3^4} is 531441 points.
    const auto tally = geom::decompose_closed_points(v, 4u, opt);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto count = geom::count_points(v, n, opt);
      r.check(tally.orbit_sum(n) == count, "orbit identity, system " + std::to_string(i) +
                                               " n=" + str(n));
      r.check(Integer(count + geom::count_points(w, n, opt)) == ipow(q, n * sys.num_vars()),
              "complement identity, system " + std::to_string(i) + " n=" + str(n));
    }
  }
  return r.finish("sum_{d|n} d N_d = |V(F_{q^n})| and |V| + |A^m \\ V| = q^(mn) on 50 systems");
}

SuiteReport curve_disjoint(const geom::EnumerationOptions& opt) {
  Recorder r("curve-disjoint");
  const std::vector<unsigned> deg2{3, 5};
  const std::vector<unsigned> deg3{3};
  const auto fam2 = geom::curve_family(2, 1, 2);
  const auto fam3 = geom::curve_family(3, 1, 2);
  r.check(fam2.size() == 8, "q = 2 family size");
  r.check(fam3.size() == 27, "q = 3 family size");
  r.check(geom::verify_disjoint(fam2, deg2, opt), "q = 2 curves meet over F_8 or F_32");
  r.check(geom::verify_disjoint(fam3, deg3, opt), "q = 3 curves meet over F_27");
  return r.finish("8 curves over F_2 disjoint over F_{2^3}, F_{2^5}; 27 over F_3 disjoint over F_{3^3}");
}

SuiteReport falsifier(std::uint64_t seed) {
  Recorder r("falsifier");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t q = 2 + draw(rng, 2);
    const Rational t = random_non_power(q, 1, Rational(ipow(q, 5)), rng);
    const auto w = falsify::certify_l_gap(q, t);
    r.check(w && w->value < 0 && falsify::verify_witness(*w, MeasureCandidate(t)),
            "no negative Omega witness for t = " + to_string(t));
  }
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t n = 1; n <= 3; ++n) {
      for (std::uint64_t m = 2; m <= 6; ++m) {
        if (n % m == 0) continue;
        auto s = kring::counting_measure(q, n).explicit_values();
        for (auto d : divisors(m)) s[d] = Rational(d);
        const MeasureCandidate cand(Rational(ipow(q, n)), s);
        // Hom consistency forces s_d = d for d | m, so the witness sits at the
        // least divisor of m that does not divide n.
        std::uint64_t first = m;
        for (auto d : divisors(m)) {
          if (n % d != 0) {
            first = d;
            break;
          }
        }
        const auto w = falsify::eliminate_nondivisors(q, n, cand);
        const Rational expected = -Rational(kring::closed_point_count(q, first) * first);
        r.check(w && w->value == expected && falsify::verify_witness(*w, cand),
                "Y_{" + str(n) + "," + str(first) + "} at q=" + str(q));
      }
    }
    const MeasureCandidate top(Rational(ipow(q, 2)), {{2, 0}});
    const auto w = falsify::force_top_spec(q, 2, top);
    r.check(w && w->value < 0 && falsify::verify_witness(*w, top), "curve family at q=" + str(q));
  }
  return r.finish("gap, non-divisor and curve-family witnesses are exactly negative");
}

SuiteReport end_to_end(std::uint64_t seed) {
  Recorder r("end-to-end");
  std::mt19937_64 rng(seed);
  std::size_t accepted = 0, rejected = 0;
  for (std::uint64_t q : {2, 3}) {
    for (const auto& cand : candidate_grid(q, 250, 3, 6, rng)) {
      const auto verdict = falsify::classify(q, cand);
      const bool expected = matches_counting_measure(q, cand, 6);
      r.check(verdict.is_counting_measure() == expected,
              "classify disagrees on t = " + to_string(cand.t()));
      if (verdict.witness) {
        r.check(falsify::verify_witness(*verdict.witness, cand), "unverified witness");
        ++rejected;
      } else {
        ++accepted;
      }
    }
  }
  return r.finish("classified 500 candidates: " + std::to_string(accepted) + " counting measures, " +
                  std::to_string(rejected) + " refuted");
}

SuiteReport named_classes(const geom::EnumerationOptions& opt) {
  Recorder r("named-classes");
  const std::vector<std::string> names{"affine:1", "affine:2", "omega:1", "omega:2",
                                       "xk:1",     "xk:2",     "xk:3",    "ykm:1:2",
                                       "ykm:2:3",  "spec:1",   "spec:2",  "spec:3",
                                       "curvefam:1", "curvecomp:1", "spec:2*spec:3"};
  for (std::uint64_t q : {2, 3}) {
    for (const auto& name : names) {
      const auto set = builtin_set(q, name);
      const auto cls = builtin_class(q, name);
      for (unsigned n = 1; n <= 4; ++n) {
        if (ipow(q, n * set.ambient_dim()) > Integer(opt.limit)) continue;
        r.check(kring::evaluate(cls, kring::counting_measure(q, n)) ==
                    Rational(geom::count_points(set, n, opt)),
                name + " at q=" + str(q) + " n=" + str(n));
      }
    }
  }
  return r.finish("every named class evaluates to the enumerated point count");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"omega-identity", "omega-emptiness", "divisor-sum", "x-law",         "hom",
          "orbit-identity", "curve-disjoint",  "falsifier",   "end-to-end",    "named-classes",
          "all"};
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      const geom::EnumerationOptions& options) {
  if (name == "omega-identity") return omega_identity();
  if (name == "omega-emptiness") return omega_emptiness(options);
  if (name == "divisor-sum") return divisor_sum();
  if (name == "x-law") return x_law(options);
  if (name == "hom") return hom(seed, options);
  if (name == "orbit-identity") return orbit_identity(seed, options);
  if (name == "curve-disjoint") return curve_disjoint(options);
  if (name == "falsifier") return falsifier(seed);
  if (name == "end-to-end") return end_to_end(seed);
  if (name == "named-classes") return named_classes(options);
  if (name == "all") {
    SuiteReport all{"all", true, {}};
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = run_suite(n, seed, options);
      all.passed = all.passed && part.passed;
      all.lines.insert(all.lines.end(), part.lines.begin(), part.lines.end());
    }
    return all;
  }
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

RingElement random_ring_element(std::uint64_t q, std::mt19937_64& rng, std::size_t max_terms,
                                std::uint64_t max_l_exp, std::uint64_t max_m) {
  std::map<kring::BasisKey, Integer> terms;
  const std::size_t count = draw(rng, max_terms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const kring::BasisKey key{draw(rng, max_l_exp + 1), 1 + draw(rng, max_m)};
    terms[key] += static_cast<long long>(draw(rng, 19)) - 9;
  }
  return RingElement::from_terms(q, terms);
}

Rational random_non_power(std::uint64_t q, const Rational& lo, const Rational& hi,
                          std::mt19937_64& rng) {
  for (;;) {
    const Integer den = 1 + draw(rng, 12);
    const Rational span = (hi - lo) * den;
    const Integer room = boost::multiprecision::numerator(span) /
                         boost::multiprecision::denominator(span);
    if (room < 2) continue;
    const Integer offset = 1 + Integer(draw(rng, static_cast<std::uint64_t>(
                                                   std::min<Integer>(room - 1, Integer(1) << 62))));
    const Rational t = lo + Rational(offset, den);
    if (t > lo && t < hi && exact_log(t, q) < 0) return t;
  }
}

std::vector<MeasureCandidate> candidate_grid(std::uint64_t q, std::size_t count, std::uint64_t max_n,
                                             std::uint64_t max_m, std::mt19937_64& rng) {
  std::vector<MeasureCandidate> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t n = 1 + draw(rng, max_n);
    const bool power = draw(rng, 10) < 7;
    const Rational t = power ? Rational(ipow(q, n))
                             : random_non_power(q, 0, Rational(ipow(q, max_n + 1)), rng);
    std::map<std::uint64_t, Rational> s;
    if (power && draw(rng, 3) == 0) {
      s = kring::counting_measure(q, n).explicit_values();
    } else {
      for (std::uint64_t m = 2; m <= max_m; ++m) {
        const auto pick = draw(rng, 20);
        if (pick < 9) {
          s[m] = 0;
        } else if (pick < 18) {
          s[m] = Rational(m);
        } else {
          // Neither 0 nor m.
          s[m] = draw(rng, 2) ? Rational(static_cast<long long>(m), 2) : Rational(-1);
        }
      }
    }
    out.emplace_back(t, std::move(s));
  }
  return out;
}

bool matches_counting_measure(std::uint64_t q, const MeasureCandidate& c, std::uint64_t max_m) {
  const long n = exact_log(c.t(), q);
  if (n < 1) return false;
  const auto mu = kring::counting_measure(q, static_cast<std::uint64_t>(n));
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    if (c.s(m) != mu.s(m)) return false;
  }
  for (const auto& [m, v] : c.explicit_values()) {
    if (v != mu.s(m)) return false;
  }
  return true;
}

}  // namespace gk::suites

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

#include "gk/falsify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "gk/errors.hpp"

namespace gk::falsify {

using kring::MeasureCandidate;
using kring::RingElement;
using gk::to_string;

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 5> kNames{{
    {Construction::kHomViolation, "HomViolation"},
    {Construction::kOmegaGap, "OmegaGap"},
    {Construction::kYElimination, "YElimination"},
    {Construction::kCurveFamily, "CurveFamily"},
    {Construction::kComplementSandwich, "ComplementSandwich"},
}};

// (2n)! for the largest n whose curve family is materialized.
constexpr std::uint64_t kMaxCurveN = 4;

std::string qs(std::uint64_t q) { return "F_" + std::to_string(q); }

Witness positivity_witness(Construction c, RingElement cls, const MeasureCandidate& cand,
                           std::string narrative) {
  Witness w;
  w.construction = c;
  w.value = kring::evaluate(cls, cand);
  w.class_expr = std::move(cls);
  w.narrative = std::move(narrative);
  return w;
}

void require_power(std::uint64_t q, std::uint64_t n, const MeasureCandidate& cand) {
  if (n == 0) throw PreconditionError("n must be >= 1");
  if (cand.t() != Rational(ipow(q, n))) {
    throw PreconditionError("candidate does not send L to q^n = " + ipow(q, n).str());
  }
  const std::uint64_t bound = std::max(n, cand.max_index());
  if (!kring::hom_consistency(cand, kring::divisor_pairs(bound)).empty()) {
    throw PreconditionError("candidate violates s_a s_b = gcd(a,b) s_lcm(a,b) on divisor pairs");
  }
}

}  // namespace

std::string_view to_string(Construction c) {
  for (const auto& [k, name] : kNames) {
    if (k == c) return name;
  }
  return "?";
}

Construction construction_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ParseError("unknown witness construction '" + std::string(name) + "'");
}

bool verify_witness(const Witness& w, const MeasureCandidate& cand) {
  if (w.construction == Construction::kHomViolation) {
    if (!w.violation) return false;
    const auto found = kring::hom_consistency(cand, {{w.violation->a, w.violation->b}});
    return found.size() == 1 && found.front() == *w.violation &&
           w.value == w.violation->lhs - w.violation->rhs;
  }
  if (w.construction == Construction::kComplementSandwich) return w.value != 0;
  if (!w.class_expr) return false;
  return w.value < 0 && kring::evaluate(*w.class_expr, cand) == w.value;
}

std::optional<Witness> certify_l_gap(std::uint64_t q, const Rational& t) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const MeasureCandidate cand(t);
  if (t < 0) {
    return positivity_witness(Construction::kOmegaGap, RingElement::lefschetz(q), cand,
                              "the affine line itself has negative measure");
  }
  if (exact_log(t, q) >= 1) return std::nullopt;
  std::uint64_t n = 1;
  Integer qn = q;
  while (Rational(qn) <= t) {
    qn *= q;
    ++n;
  }
  Witness w = positivity_witness(
      Construction::kOmegaGap, kring::omega_class(q, n), cand,
      "Omega^" + std::to_string(n) + " (A^" + std::to_string(n) + " minus every proper " + qs(q) +
          "-rational affine subspace) has class (L-q)...(L-q^" + std::to_string(n) +
          "); with q^" + std::to_string(n - 1) + " < mu(L) < q^" + std::to_string(n) +
          " exactly one factor is negative");
  return w;
}

std::optional<Witness> eliminate_nondivisors(std::uint64_t q, std::uint64_t n,
                                             const MeasureCandidate& cand) {
  require_power(q, n, cand);
  for (const auto& [m, value] : cand.explicit_values()) {
    if (n % m == 0 || value == 0) continue;
    Witness w = positivity_witness(
        Construction::kYElimination, kring::class_y_km(q, n, m), cand,
        "Y_{" + std::to_string(n) + "," + std::to_string(m) + "} (A^1 minus the closed points of "
            "degree dividing " + std::to_string(n) + " and those of degree " + std::to_string(m) +
            ") is negative when Spec F_{q^" + std::to_string(m) + "} has nonzero measure");
    if (w.value < 0) return w;
  }
  return std::nullopt;
}

std::optional<Witness> force_top_spec(std::uint64_t q, std::uint64_t n,
                                      const MeasureCandidate& cand) {
  require_power(q, n, cand);
  if (n == 1 || cand.s(n) == Rational(n)) return std::nullopt;
  for (const auto& [m, value] : cand.explicit_values()) {
    if (m > n && n % m != 0 && value != 0) {
      throw PreconditionError("s_" + std::to_string(m) +
                              " is nonzero; eliminate non-divisors before forcing s_n");
    }
  }
  if (n > kMaxCurveN) {
    throw BoundExceeded("curve family for n = " + std::to_string(n) +
                        " needs the divisors of (2n)!, beyond the materialization limit");
  }
  const std::string k = factorial(2 * n).str();
  return positivity_witness(
      Construction::kCurveFamily, kring::class_curve_complement(q, n), cand,
      "the " + ipow(q, 2 * n + 1).str() + " open curves y = P(x), deg P <= " +
          std::to_string(2 * n) + ", x outside F_{q^" + k + "}, are disjoint copies of X_" + k +
          "; when Spec F_{q^" + std::to_string(n) + "} has measure 0 each has measure >= 2, " +
          "so the rest of A^2 is negative");
}

bool SandwichReport::ok() const {
  return orbit_sum == points && Integer(points) + complement_points == ambient_points;
}

SandwichReport sandwich_report(std::uint64_t q, std::uint64_t n, const geom::PolySystem& system,
                               const geom::EnumerationOptions& options) {
  if (system.q() != q) throw InvalidArgument("system is defined over a different base field");
  if (n == 0) throw InvalidArgument("n must be >= 1");
  const auto v = geom::ConstructibleSet::zero_set(system);
  const auto w = geom::ConstructibleSet::complement(v);
  std::vector<unsigned> degrees;
  for (auto d : divisors(n)) degrees.push_back(static_cast<unsigned>(d));
  const auto tally = geom::decompose_closed_points(v, std::span<const unsigned>(degrees), options);

  SandwichReport r;
  r.points = geom::count_points(v, static_cast<unsigned>(n), options);
  r.orbit_sum = tally.orbit_sum(static_cast<unsigned>(n));
  r.complement_points = geom::count_points(w, static_cast<unsigned>(n), options);
  r.ambient_points = ipow(q, n * system.num_vars());
  return r;
}

bool sandwich_check(std::uint64_t q, std::uint64_t n, const geom::PolySystem& system,
                    const geom::EnumerationOptions& options) {
  return sandwich_report(q, n, system, options).ok();
}

std::vector<geom::PolySystem> default_probes(std::uint64_t q) {
  const geom::BaseField base(q);
  const ff::FieldElement one = base.ctx().one();
  const ff::FieldElement minus_one = base.ctx().neg(one);
  geom::Polynomial elliptic{{{{0, 2}, one}, {{3, 0}, minus_one}, {{1, 0}, minus_one}}};
  geom::Polynomial hyperbola{{{{1, 1}, one}, {{0, 0}, minus_one}}};
  return {geom::PolySystem(q, 2, {elliptic}), geom::PolySystem(q, 2, {hyperbola})};
}

Verdict classify(std::uint64_t q, const MeasureCandidate& cand, const ClassifyOptions& options) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  Verdict verdict;
  const long log_t = exact_log(cand.t(), q);
  const std::uint64_t bound = std::max<std::uint64_t>(
      {options.spec_index_limit, cand.max_index(), log_t > 0 ? std::uint64_t(log_t) : 1});

  const auto violations = kring::hom_consistency(cand, kring::divisor_pairs(bound));
  if (!violations.empty()) {
    const auto& v = violations.front();
    Witness w;
    w.construction = Construction::kHomViolation;
    w.violation = v;
    w.value = v.lhs - v.rhs;
    w.narrative = "s_" + std::to_string(v.a) + " * s_" + std::to_string(v.b) + " = " +
                  to_string(v.lhs) + " but gcd * s_lcm = " + to_string(v.rhs) +
                  "; Spec F_{q^a} x Spec F_{q^b} is gcd(a,b) copies of Spec F_{q^lcm(a,b)}";
    verdict.witness = std::move(w);
    return verdict;
  }

  if (auto w = certify_l_gap(q, cand.t())) {
    verdict.witness = std::move(w);
    return verdict;
  }
  const auto n = static_cast<std::uint64_t>(log_t);

  if (auto w = eliminate_nondivisors(q, n, cand)) {
    verdict.witness = std::move(w);
    return verdict;
  }
  if (auto w = force_top_spec(q, n, cand)) {
    verdict.witness = std::move(w);
    return verdict;
  }

  const MeasureCandidate expected = kring::counting_measure(q, n);
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (cand.s(m) != expected.s(m)) {
      throw std::logic_error("candidate survived every construction but differs at s_" +
                             std::to_string(m));
    }
  }

  const auto probes = options.probes ? *options.probes : default_probes(q);
  for (const auto& sys : probes) {
    Integer work = ipow(q, n * sys.num_vars());
    if (work > Integer(options.enumeration.limit)) continue;
    const SandwichReport r = sandwich_report(q, n, sys, options.enumeration);
    if (!r.ok()) {
      Witness w;
      w.construction = Construction::kComplementSandwich;
      const Integer orbit_gap = abs(Integer(r.orbit_sum) - r.points);
      const Integer fill_gap = abs(r.ambient_points - r.points - r.complement_points);
      w.value = Rational(orbit_gap + fill_gap);
      w.narrative = "orbit decomposition or complement count disagrees with direct enumeration";
      verdict.witness = std::move(w);
      return verdict;
    }
    ++verdict.probes_checked;
  }
  verdict.counting_n = n;
  return verdict;
}

}  // namespace gk::falsify

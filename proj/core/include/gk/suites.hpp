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

// Seeded property campaigns behind `gkring verify`. Every campaign is a pure
// function of (name, seed, enumeration options), so reports are reproducible
// byte for byte.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace gk::suites {

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
};

std::vector<std::string> suite_names();

/// Throws InvalidArgument for an unknown suite. "all" runs every suite and
/// concatenates their reports.
SuiteReport run_suite(std::string_view name, std::uint64_t seed,
                      const geom::EnumerationOptions& options = {});

// Generators shared with the test suites.

/// Up to max_terms terms with L-exponent <= max_l_exp, spec index <= max_m
/// and coefficients in [-9, 9].
kring::RingElement random_ring_element(std::uint64_t q, std::mt19937_64& rng,
                                       std::size_t max_terms = 4, std::uint64_t max_l_exp = 3,
                                       std::uint64_t max_m = 6);

/// A rational in (lo, hi) that is not an integer power of q.
Rational random_non_power(std::uint64_t q, const Rational& lo, const Rational& hi,
                          std::mt19937_64& rng);

/// The classification grid: candidates over q with L-values that are powers q^n
/// (n <= max_n) or not, and s_m for 2 <= m <= max_m drawn from {0, m, other}.
std::vector<kring::MeasureCandidate> candidate_grid(std::uint64_t q, std::size_t count,
                                                    std::uint64_t max_n, std::uint64_t max_m,
                                                    std::mt19937_64& rng);

/// True iff the candidate equals counting_measure(q, n) for some n, checked on t
/// and on every s_m with m <= max_m and every explicit index.
bool matches_counting_measure(std::uint64_t q, const kring::MeasureCandidate& c,
                              std::uint64_t max_m);

}  // namespace gk::suites

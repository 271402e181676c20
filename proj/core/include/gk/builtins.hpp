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

// Named constructions, addressable by string so that the CLI and JSON inputs
// can refer to them without spelling out polynomials:
//
//   affine:m      A^m                         L^m
//   omega:n       Omega^n                     (L - q)...(L - q^n)
//   xk:k          X_k                         L - sum_{d|k} c_d S_d
//   ykm:k:m       Y_{k,m} (m not dividing k)  X_k - c_m S_m
//   spec:d        Spec F_{q^d}                S_d
//   curvefam:n    disjoint union of the open curves y = P(x), deg P <= 2n,
//                 x outside F_{q^((2n)!)}     q^(2n+1) [X_{(2n)!}]
//   curvecomp:n   A^2 minus curvefam:n        L^2 - q^(2n+1) [X_{(2n)!}]
//
// "a*b" denotes the product of two named objects.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace gk {

/// Throws ParseError for unknown or malformed names.
geom::ConstructibleSet builtin_set(std::uint64_t q, std::string_view name);
kring::RingElement builtin_class(std::uint64_t q, std::string_view name);

/// One usage line per builtin.
std::vector<std::string> builtin_usage();

}  // namespace gk

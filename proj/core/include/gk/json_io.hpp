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

// JSON encodings of the library's value types. Writers emit every number as
// a decimal or "num/den" string. Readers also accept plain JSON integers.
// Shapes below show numbers bare for brevity.
//
//   FieldCtx          {"p": 2, "N": 3, "modulus": [1, 1, 0]}   (c_0..c_{N-1})
//   FieldElement      [c_0, ..., c_{N-1}]
//   PolySystem        {"q": 2, "num_vars": 2,
//                      "polys": [[{"exp": [0, 2], "coeff": 1}, ...], ...]}
//                     coeff is an integer for prime q, else an F_q element array
//   ConstructibleSet  {"kind": "system", "system": {...}}
//                     {"kind": "union" | "intersection", "parts": [...]}
//                     {"kind": "difference", "whole": {...}, "removed": {...}}
//                     {"kind": "degree_filter", "coord": 0,
//                      "relation": "divides" | "not_divides" | "equals" | "not_equals",
//                      "value": 2, "inner": {...}}
//                     {"kind": "product", "left": {...}, "right": {...}}
//                     {"kind": "builtin", "name": "omega:2", "q": 2}
//   RingElement       {"q": 2, "terms": [{"L_exp": 1, "spec_m": 1, "coeff": "-6"}]}
//                     (a bare terms array is accepted when q is supplied)
//   MeasureCandidate  {"t": "4", "s": {"2": "2", "3": "0"}}
//   Witness           {"construction": "OmegaGap", "class": RingElement | null,
//                      "value": "-1", "narrative": "...",
//                      "violation": {"a": 2, "b": 2, "lhs": "1", "rhs": "2"}}
//   ClosedPointTally  {"1": "2", "2": "1", "3": "2"}

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "gk/falsify.hpp"
#include "gk/ff.hpp"
#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace gk::json_io {

using nlohmann::json;

json to_json(const ff::FieldCtx& ctx);
ff::FieldCtx field_from_json(const json& j);
json element_to_json(const ff::FieldCtx& ctx, ff::FieldElement a);
ff::FieldElement element_from_json(const ff::FieldCtx& ctx, const json& j);

json to_json(const geom::PolySystem& system);
geom::PolySystem system_from_json(const json& j, std::optional<std::uint64_t> q = std::nullopt);

json to_json(const geom::ConstructibleSet& set);
geom::ConstructibleSet set_from_json(const json& j, std::optional<std::uint64_t> q = std::nullopt);

json to_json(const geom::ClosedPointTally& tally);

json to_json(const kring::RingElement& x);
kring::RingElement ring_element_from_json(const json& j,
                                          std::optional<std::uint64_t> q = std::nullopt);

json to_json(const kring::MeasureCandidate& m);
kring::MeasureCandidate candidate_from_json(const json& j);

json to_json(const falsify::Witness& w);
falsify::Witness witness_from_json(const json& j, std::optional<std::uint64_t> q = std::nullopt);

/// Parses text, converting nlohmann parse errors to gk::ParseError.
json parse(const std::string& text);

}  // namespace gk::json_io

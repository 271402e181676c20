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

#include "gk/builtins.hpp"

#include <charconv>

#include "gk/arith.hpp"
#include "gk/errors.hpp"

namespace gk {

namespace {

struct Name {
  std::string head;
  std::vector<std::uint64_t> args;
};

Name parse_name(std::string_view text) {
  Name out;
  const auto colon = text.find(':');
  out.head = std::string(text.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  while (colon != std::string_view::npos) {
    const auto next = rest.find(':');
    const std::string_view piece = rest.substr(0, next);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw ParseError("bad argument '" + std::string(piece) + "' in builtin '" +
                       std::string(text) + "'");
    }
    out.args.push_back(v);
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return out;
}

void expect_args(const Name& name, std::size_t count, std::string_view text) {
  if (name.args.size() != count) {
    throw ParseError("builtin '" + std::string(text) + "' expects " + std::to_string(count) +
                     " argument(s)");
  }
  for (auto a : name.args) {
    if (a == 0) throw ParseError("builtin arguments must be positive in '" + std::string(text) + "'");
  }
}

std::uint64_t curve_exclusion(std::uint64_t n) {
  if (n > 4) throw BoundExceeded("curve family exclusion (2n)! is materialized for n <= 4 only");
  return static_cast<std::uint64_t>(factorial(2 * n));
}

template <class T, class Single, class Product>
T resolve(std::string_view text, Single single, Product product) {
  const auto star = text.find('*');
  if (star != std::string_view::npos) {
    return product(resolve<T>(text.substr(0, star), single, product),
                   resolve<T>(text.substr(star + 1), single, product));
  }
  return single(text);
}

}  // namespace

geom::ConstructibleSet builtin_set(std::uint64_t q, std::string_view text) {
  auto single = [q](std::string_view t) -> geom::ConstructibleSet {
    const Name name = parse_name(t);
    if (name.head == "affine") {
      if (name.args.size() != 1) throw ParseError("affine:m expects one argument");
      return geom::affine_space(q, name.args[0]);
    }
    if (name.head == "omega") {
      if (name.args.size() != 1) throw ParseError("omega:n expects one argument");
      return geom::omega(q, name.args[0]);
    }
    if (name.head == "xk") {
      expect_args(name, 1, t);
      return geom::x_k(q, name.args[0]);
    }
    if (name.head == "ykm") {
      expect_args(name, 2, t);
      return geom::y_km(q, name.args[0], name.args[1]);
    }
    if (name.head == "spec") {
      expect_args(name, 1, t);
      return geom::spec_point(q, name.args[0]);
    }
    if (name.head == "curvefam" || name.head == "curvecomp") {
      expect_args(name, 1, t);
      auto family = geom::curve_family(q, name.args[0], curve_exclusion(name.args[0]));
      auto u = geom::ConstructibleSet::unite(std::move(family));
      return name.head == "curvefam" ? u : geom::ConstructibleSet::complement(u);
    }
    throw ParseError("unknown builtin '" + std::string(t) + "'");
  };
  return resolve<geom::ConstructibleSet>(text, single, [](auto a, auto b) {
    return geom::ConstructibleSet::product(std::move(a), std::move(b));
  });
}

kring::RingElement builtin_class(std::uint64_t q, std::string_view text) {
  auto single = [q](std::string_view t) -> kring::RingElement {
    const Name name = parse_name(t);
    if (name.head == "affine") {
      if (name.args.size() != 1) throw ParseError("affine:m expects one argument");
      return kring::class_affine(q, name.args[0]);
    }
    if (name.head == "omega") {
      if (name.args.size() != 1) throw ParseError("omega:n expects one argument");
      return kring::omega_class(q, name.args[0]);
    }
    if (name.head == "xk") {
      expect_args(name, 1, t);
      return kring::class_x_k(q, name.args[0]);
    }
    if (name.head == "ykm") {
      expect_args(name, 2, t);
      return kring::class_y_km(q, name.args[0], name.args[1]);
    }
    if (name.head == "spec") {
      expect_args(name, 1, t);
      return kring::class_spec(q, name.args[0]);
    }
    if (name.head == "curvefam") {
      expect_args(name, 1, t);
      const std::uint64_t n = name.args[0];
      return ipow(q, 2 * n + 1) * kring::class_x_k(q, curve_exclusion(n));
    }
    if (name.head == "curvecomp") {
      expect_args(name, 1, t);
      curve_exclusion(name.args[0]);
      return kring::class_curve_complement(q, name.args[0]);
    }
    throw ParseError("unknown builtin '" + std::string(t) + "'");
  };
  return resolve<kring::RingElement>(text, single, [](auto a, auto b) { return a * b; });
}

std::vector<std::string> builtin_usage() {
  return {
      "affine:m      affine space A^m",
      "omega:n       A^n minus all proper F_q-rational affine subspaces",
      "xk:k          A^1 minus closed points of degree dividing k",
      "ykm:k:m       X_k minus closed points of degree m (m not dividing k)",
      "spec:d        Spec F_{q^d}, the zero set of a degree-d irreducible",
      "curvefam:n    disjoint open curves y = P(x), deg P <= 2n, x outside F_{q^(2n)!}",
      "curvecomp:n   A^2 minus curvefam:n",
      "a*b           product of two named objects",
  };
}

}  // namespace gk

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

#include "gk/geom.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "gk/errors.hpp"

namespace gk::geom {

using ff::FieldCtx;
using ff::FieldElement;

BaseField::BaseField(std::uint64_t q)
    : q_(q), pp_(gk::prime_power(q)), ctx_(ff::make_field(pp_.p, pp_.e)) {}

std::vector<FieldElement> BaseField::elements() const { return ff::enumerate(ctx_, q_); }

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms) {
    best = std::max(best, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  }
  return best;
}

PolySystem::PolySystem(std::uint64_t q, std::size_t num_vars, std::vector<Polynomial> polys)
    : q_(q), num_vars_(num_vars) {
  const BaseField base(q);
  for (auto& poly : polys) {
    std::map<Exponents, FieldElement> merged;
    for (auto& term : poly.terms) {
      if (term.exponents.size() != num_vars) {
        throw InvalidArgument("monomial has " + std::to_string(term.exponents.size()) +
                              " exponents, system has " + std::to_string(num_vars) + " variables");
      }
      if (!base.ctx().contains(term.coeff)) {
        throw InvalidArgument("coefficient " + std::to_string(term.coeff.packed) +
                              " is not an element of F_" + std::to_string(q));
      }
      auto [it, fresh] = merged.emplace(term.exponents, term.coeff);
      if (!fresh) it->second = base.ctx().add(it->second, term.coeff);
    }
    Polynomial normal;
    for (auto& [exps, c] : merged) {
      if (c.packed != 0) normal.terms.push_back({exps, c});
    }
    polys_.push_back(std::move(normal));
  }
}

bool DegreeCondition::holds(std::uint64_t degree) const {
  switch (relation) {
    case DegreeRelation::kDivides:
      return value % degree == 0;
    case DegreeRelation::kNotDivides:
      return value % degree != 0;
    case DegreeRelation::kEquals:
      return degree == value;
    case DegreeRelation::kNotEquals:
      return degree != value;
  }
  return false;
}

// ---------------------------------------------------------------------------
// ConstructibleSet

struct ConstructibleSet::Node {
  Kind kind = Kind::kSystem;
  std::uint64_t q = 0;
  std::size_t dim = 0;
  std::optional<PolySystem> system;
  std::vector<ConstructibleSet> children;
  std::size_t coord = 0;
  DegreeCondition cond;
};

namespace {

void require_compatible(const std::vector<ConstructibleSet>& parts) {
  if (parts.empty()) throw InvalidArgument("set operation needs at least one operand");
  for (const auto& s : parts) {
    if (s.q() != parts.front().q() || s.ambient_dim() != parts.front().ambient_dim()) {
      throw InvalidArgument("constructible sets must share q and ambient dimension");
    }
  }
}

}  // namespace

ConstructibleSet ConstructibleSet::zero_set(PolySystem system) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSystem;
  node->q = system.q();
  node->dim = system.num_vars();
  node->system = std::move(system);
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::ambient(std::uint64_t q, std::size_t dim) {
  return zero_set(PolySystem(q, dim, {}));
}

ConstructibleSet ConstructibleSet::unite(std::vector<ConstructibleSet> parts) {
  require_compatible(parts);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnion;
  node->q = parts.front().q();
  node->dim = parts.front().ambient_dim();
  node->children = std::move(parts);
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::intersect(std::vector<ConstructibleSet> parts) {
  require_compatible(parts);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kIntersection;
  node->q = parts.front().q();
  node->dim = parts.front().ambient_dim();
  node->children = std::move(parts);
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::difference(ConstructibleSet whole, ConstructibleSet removed) {
  std::vector<ConstructibleSet> parts{std::move(whole), std::move(removed)};
  require_compatible(parts);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kDifference;
  node->q = parts.front().q();
  node->dim = parts.front().ambient_dim();
  node->children = std::move(parts);
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::degree_filter(ConstructibleSet inner, std::size_t coord,
                                                 DegreeCondition cond) {
  if (coord >= inner.ambient_dim()) throw InvalidArgument("degree filter coordinate out of range");
  if (cond.value == 0) throw InvalidArgument("degree filter value must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kDegreeFilter;
  node->q = inner.q();
  node->dim = inner.ambient_dim();
  node->coord = coord;
  node->cond = cond;
  node->children = {std::move(inner)};
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::product(ConstructibleSet left, ConstructibleSet right) {
  if (left.q() != right.q()) throw InvalidArgument("product of sets over different base fields");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProduct;
  node->q = left.q();
  node->dim = left.ambient_dim() + right.ambient_dim();
  node->children = {std::move(left), std::move(right)};
  return ConstructibleSet(std::move(node));
}

ConstructibleSet ConstructibleSet::complement(const ConstructibleSet& set) {
  return difference(ambient(set.q(), set.ambient_dim()), set);
}

std::uint64_t ConstructibleSet::q() const { return node_->q; }
std::size_t ConstructibleSet::ambient_dim() const { return node_->dim; }
ConstructibleSet::Kind ConstructibleSet::kind() const { return node_->kind; }

const PolySystem& ConstructibleSet::system() const {
  if (!node_->system) throw InvalidArgument("not a polynomial-system leaf");
  return *node_->system;
}
const std::vector<ConstructibleSet>& ConstructibleSet::children() const { return node_->children; }
std::size_t ConstructibleSet::filter_coord() const { return node_->coord; }
const DegreeCondition& ConstructibleSet::filter_condition() const { return node_->cond; }

// ---------------------------------------------------------------------------
// Named constructions

ConstructibleSet affine_space(std::uint64_t q, std::size_t dim) {
  return ConstructibleSet::ambient(q, dim);
}

ConstructibleSet omega(std::uint64_t q, std::size_t n) {
  if (n == 0) return ConstructibleSet::ambient(q, 0);
  const BaseField base(q);
  const auto elems = base.elements();
  std::vector<ConstructibleSet> hyperplanes;
  // Linear parts (a_1..a_n) != 0 normalized so the first nonzero entry is 1.
  std::vector<std::uint64_t> digits(n, 0);
  for (;;) {
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    if (i == n) break;
    const auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
    if (*first != 1) continue;
    for (auto a0 : elems) {
      Polynomial h;
      if (a0.packed != 0) h.terms.push_back({Exponents(n, 0), a0});
      for (std::size_t v = 0; v < n; ++v) {
        if (digits[v] == 0) continue;
        Exponents e(n, 0);
        e[v] = 1;
        h.terms.push_back({e, FieldElement{digits[v]}});
      }
      hyperplanes.push_back(ConstructibleSet::zero_set(PolySystem(q, n, {h})));
    }
  }
  return ConstructibleSet::difference(ConstructibleSet::ambient(q, n),
                                      ConstructibleSet::unite(std::move(hyperplanes)));
}

ConstructibleSet x_k(std::uint64_t q, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("X_k needs k >= 1");
  return ConstructibleSet::degree_filter(ConstructibleSet::ambient(q, 1), 0,
                                         {DegreeRelation::kNotDivides, k});
}

ConstructibleSet y_km(std::uint64_t q, std::uint64_t k, std::uint64_t m) {
  if (m == 0 || k == 0) throw InvalidArgument("Y_{k,m} needs k, m >= 1");
  if (k % m == 0) {
    throw InvalidArgument("Y_{k,m} needs m not dividing k (m | k gives X_k itself)");
  }
  return ConstructibleSet::degree_filter(x_k(q, k), 0, {DegreeRelation::kNotEquals, m});
}

ConstructibleSet spec_point(std::uint64_t q, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("Spec F_{q^d} needs d >= 1");
  const BaseField base(q);
  const ff::Poly f = ff::least_monic_irreducible(base.ctx(), static_cast<unsigned>(d));
  Polynomial poly;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].packed != 0) poly.terms.push_back({Exponents{static_cast<unsigned>(i)}, f[i]});
  }
  return ConstructibleSet::zero_set(PolySystem(q, 1, {poly}));
}

ConstructibleSet curve_graph(std::uint64_t q, const std::vector<FieldElement>& poly,
                             std::uint64_t exclusion_k) {
  const BaseField base(q);
  Polynomial graph;
  graph.terms.push_back({{0, 1}, base.ctx().one()});
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i].packed != 0) {
      graph.terms.push_back({{static_cast<unsigned>(i), 0}, base.ctx().neg(poly[i])});
    }
  }
  return ConstructibleSet::degree_filter(ConstructibleSet::zero_set(PolySystem(q, 2, {graph})), 0,
                                         {DegreeRelation::kNotDivides, exclusion_k});
}

std::vector<ConstructibleSet> curve_family(std::uint64_t q, std::size_t n,
                                           std::uint64_t exclusion_k) {
  const std::size_t len = 2 * n + 1;
  std::vector<FieldElement> coeffs(len, FieldElement{0});
  std::vector<ConstructibleSet> family;
  for (;;) {
    family.push_back(curve_graph(q, coeffs, exclusion_k));
    std::size_t i = 0;
    for (; i < len; ++i) {
      if (++coeffs[i].packed < q) break;
      coeffs[i].packed = 0;
    }
    if (i == len) break;
  }
  return family;
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

constexpr std::uint64_t kDegreeTableLimit = ff::kDefaultEnumerationLimit;

struct CompiledTerm {
  FieldElement coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;  // (coordinate, exponent)
};

using CompiledPoly = std::vector<CompiledTerm>;

struct CompiledNode {
  ConstructibleSet::Kind kind = ConstructibleSet::Kind::kSystem;
  std::vector<CompiledPoly> polys;
  std::vector<std::size_t> children;
  std::size_t coord = 0;
  DegreeCondition cond;
};

}  // namespace

struct Evaluator::Impl {
  explicit Impl(FieldCtx f) : field(std::move(f)) {}

  FieldCtx field;
  std::uint64_t q = 0;
  unsigned n = 0;
  std::size_t dim = 0;
  std::vector<CompiledNode> nodes;
  std::size_t root = 0;
  std::vector<std::uint64_t> base_coeff_map;  // packed F_q element -> packed image

  mutable std::once_flag degree_once;
  mutable std::vector<std::uint8_t> degree_table;

  FieldElement embed(FieldElement c) const { return {base_coeff_map[c.packed]}; }

  std::size_t compile(const ConstructibleSet& set, std::size_t offset) {
    CompiledNode node;
    node.kind = set.kind();
    switch (set.kind()) {
      case ConstructibleSet::Kind::kSystem:
        for (const auto& poly : set.system().polys()) {
          CompiledPoly cp;
          for (const auto& term : poly.terms) {
            CompiledTerm ct{embed(term.coeff), {}};
            for (std::size_t v = 0; v < term.exponents.size(); ++v) {
              if (term.exponents[v] != 0) ct.powers.emplace_back(offset + v, term.exponents[v]);
            }
            cp.push_back(std::move(ct));
          }
          node.polys.push_back(std::move(cp));
        }
        break;
      case ConstructibleSet::Kind::kUnion:
      case ConstructibleSet::Kind::kIntersection:
      case ConstructibleSet::Kind::kDifference:
        for (const auto& child : set.children()) node.children.push_back(compile(child, offset));
        break;
      case ConstructibleSet::Kind::kDegreeFilter:
        node.coord = offset + set.filter_coord();
        node.cond = set.filter_condition();
        node.children.push_back(compile(set.children()[0], offset));
        break;
      case ConstructibleSet::Kind::kProduct: {
        const auto& left = set.children()[0];
        node.children.push_back(compile(left, offset));
        node.children.push_back(compile(set.children()[1], offset + left.ambient_dim()));
        break;
      }
    }
    nodes.push_back(std::move(node));
    return nodes.size() - 1;
  }

  unsigned compute_degree(FieldElement a) const {
    FieldElement b = a;
    for (unsigned d = 1; d <= n; ++d) {
      b = field.pow(b, q);
      if (b == a) return d;
    }
    throw std::logic_error("element outside F_{q^n}");
  }

  unsigned degree(FieldElement a) const {
    if (field.order() > kDegreeTableLimit) return compute_degree(a);
    std::call_once(degree_once, [this] {
      degree_table.resize(field.order());
      for (std::uint64_t i = 0; i < field.order(); ++i) {
        degree_table[i] = static_cast<std::uint8_t>(compute_degree({i}));
      }
    });
    return degree_table[a.packed];
  }

  bool eval(std::size_t idx, std::span<const FieldElement> pt) const {
    const CompiledNode& node = nodes[idx];
    switch (node.kind) {
      case ConstructibleSet::Kind::kSystem:
        for (const auto& poly : node.polys) {
          FieldElement acc = field.zero();
          for (const auto& term : poly) {
            FieldElement t = term.coeff;
            for (auto [v, e] : term.powers) t = field.mul(t, field.pow(pt[v], e));
            acc = field.add(acc, t);
          }
          if (acc.packed != 0) return false;
        }
        return true;
      case ConstructibleSet::Kind::kUnion:
        return std::any_of(node.children.begin(), node.children.end(),
                           [&](std::size_t c) { return eval(c, pt); });
      case ConstructibleSet::Kind::kIntersection:
      case ConstructibleSet::Kind::kProduct:
        return std::all_of(node.children.begin(), node.children.end(),
                           [&](std::size_t c) { return eval(c, pt); });
      case ConstructibleSet::Kind::kDifference:
        return eval(node.children[0], pt) && !eval(node.children[1], pt);
      case ConstructibleSet::Kind::kDegreeFilter:
        return node.cond.holds(degree(pt[node.coord])) && eval(node.children[0], pt);
    }
    return false;
  }
};

Evaluator::Evaluator(const ConstructibleSet& set, unsigned n) {
  if (n == 0) throw InvalidArgument("extension degree n must be >= 1");
  const BaseField base(set.q());
  const PrimePower pp = base.prime_power();
  impl_ = std::make_unique<Impl>(ff::make_field(pp.p, pp.e * n));
  impl_->q = set.q();
  impl_->n = n;
  impl_->dim = set.ambient_dim();
  const FieldCtx& big = impl_->field;

  // F_q's canonical generator goes to the least root of its modulus in the
  // copy of F_q inside F_{q^n}. Point counts do not depend on which root.
  impl_->base_coeff_map.resize(set.q());
  if (pp.e == 1) {
    for (std::uint64_t c = 0; c < set.q(); ++c) impl_->base_coeff_map[c] = c;
  } else {
    ff::Poly f;
    for (auto c : base.ctx().modulus()) f.push_back(big.from_int(static_cast<std::int64_t>(c)));
    f.push_back(big.one());
    std::optional<FieldElement> root;
    for (auto a : ff::subfield_elements(big, set.q())) {
      if (ff::evaluate(big, f, a).packed == 0) {
        root = a;
        break;
      }
    }
    if (!root) throw std::logic_error("canonical modulus of F_q has no root in F_{q^n}");
    for (std::uint64_t c = 0; c < set.q(); ++c) {
      const auto digits = base.ctx().coeffs({c});
      FieldElement img = big.zero();
      FieldElement power = big.one();
      for (auto d : digits) {
        img = big.add(img, big.mul(big.from_int(static_cast<std::int64_t>(d)), power));
        power = big.mul(power, *root);
      }
      impl_->base_coeff_map[c] = img.packed;
    }
  }
  impl_->root = impl_->compile(set, 0);
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

const FieldCtx& Evaluator::field() const { return impl_->field; }
std::size_t Evaluator::ambient_dim() const { return impl_->dim; }

bool Evaluator::contains(std::span<const FieldElement> point) const {
  if (point.size() != impl_->dim) throw InvalidArgument("point has wrong dimension");
  return impl_->eval(impl_->root, point);
}

unsigned Evaluator::degree(FieldElement a) const { return impl_->degree(a); }

unsigned Evaluator::point_degree(std::span<const FieldElement> point) const {
  std::uint64_t d = 1;
  for (auto a : point) d = std::lcm(d, static_cast<std::uint64_t>(impl_->degree(a)));
  return static_cast<unsigned>(d);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::uint64_t point_total(const FieldCtx& field, std::size_t dim, std::uint64_t limit) {
  std::uint64_t total = 0;
  try {
    total = checked_pow(field.order(), dim);
  } catch (const BoundExceeded&) {
    total = 0;
  }
  if (total == 0 || total > limit) {
    throw BoundExceeded("enumerating A^" + std::to_string(dim) + " over a field of order " +
                        std::to_string(field.order()) + " exceeds the limit of " +
                        std::to_string(limit) + " points");
  }
  return total;
}

// Sums fn(point) over every point of A^dim(field), split across workers by
// index range.
template <class Fn>
std::uint64_t sum_over_points(const FieldCtx& field, std::size_t dim,
                              const EnumerationOptions& options, const Fn& fn) {
  const std::uint64_t total = point_total(field, dim, options.limit);
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(std::min<std::uint64_t>(workers, total / 4096 + 1), 1, 256));
  const std::uint64_t k = field.order();

  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<FieldElement> pt(dim);
    std::uint64_t idx = lo;
    for (std::size_t i = 0; i < dim; ++i) {
      pt[i] = {idx % k};
      idx /= k;
    }
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      acc += fn(std::span<const FieldElement>(pt));
      for (std::size_t c = 0; c < dim; ++c) {
        if (++pt[c].packed < k) break;
        pt[c].packed = 0;
      }
    }
    return acc;
  };

  if (workers == 1) return run(0, total);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = w + 1 == workers ? total : lo + chunk;
    threads.emplace_back([&, w, lo, hi] {
      try {
        partial[w] = run(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t count_points(const ConstructibleSet& set, unsigned n,
                           const EnumerationOptions& options) {
  const Evaluator ev(set, n);
  return sum_over_points(ev.field(), ev.ambient_dim(), options,
                         [&](std::span<const FieldElement> pt) -> std::uint64_t {
                           return ev.contains(pt) ? 1 : 0;
                         });
}

std::uint64_t ClosedPointTally::orbit_sum(unsigned n) const {
  std::uint64_t sum = 0;
  for (auto d : divisors(n)) {
    auto it = counts.find(static_cast<unsigned>(d));
    if (it == counts.end()) {
      throw InvalidArgument("tally has no entry for degree " + std::to_string(d));
    }
    sum += d * it->second;
  }
  return sum;
}

unsigned ClosedPointTally::max_degree() const { return counts.empty() ? 0 : counts.rbegin()->first; }

ClosedPointTally decompose_closed_points(const ConstructibleSet& set,
                                         std::span<const unsigned> degrees,
                                         const EnumerationOptions& options) {
  ClosedPointTally tally;
  for (unsigned d : degrees) {
    const Evaluator ev(set, d);
    const std::uint64_t exact =
        sum_over_points(ev.field(), ev.ambient_dim(), options,
                        [&](std::span<const FieldElement> pt) -> std::uint64_t {
                          return ev.point_degree(pt) == d && ev.contains(pt) ? 1 : 0;
                        });
    if (exact % d != 0) throw std::logic_error("degree-d points do not split into d-element orbits");
    tally.counts[d] = exact / d;
  }
  return tally;
}

ClosedPointTally decompose_closed_points(const ConstructibleSet& set, unsigned max_d,
                                         const EnumerationOptions& options) {
  if (max_d == 0) throw InvalidArgument("max_d must be >= 1");
  std::vector<unsigned> degrees(max_d);
  std::iota(degrees.begin(), degrees.end(), 1u);
  return decompose_closed_points(set, std::span<const unsigned>(degrees), options);
}

bool omega_membership(const FieldCtx& field, std::uint64_t q,
                      std::span<const FieldElement> point) {
  const auto elems = ff::subfield_elements(field, q);
  const std::size_t len = point.size() + 1;
  std::vector<std::size_t> idx(len, 0);
  for (;;) {
    std::size_t i = 0;
    for (; i < len; ++i) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
    if (i == len) return true;  // every nonzero tuple tried
    FieldElement acc = elems[idx[0]];
    for (std::size_t v = 0; v < point.size(); ++v) {
      acc = field.add(acc, field.mul(elems[idx[v + 1]], point[v]));
    }
    if (acc.packed == 0) return false;
  }
}

bool verify_disjoint(const std::vector<ConstructibleSet>& family,
                     std::span<const unsigned> degrees, const EnumerationOptions& options) {
  if (family.empty()) return true;
  require_compatible(family);
  for (unsigned d : degrees) {
    std::vector<Evaluator> evs;
    evs.reserve(family.size());
    for (const auto& member : family) evs.emplace_back(member, d);
    const std::uint64_t collisions =
        sum_over_points(evs.front().field(), family.front().ambient_dim(), options,
                        [&](std::span<const FieldElement> pt) -> std::uint64_t {
                          int hits = 0;
                          for (const auto& ev : evs) {
                            if (ev.contains(pt) && ++hits > 1) return 1;
                          }
                          return 0;
                        });
    if (collisions != 0) return false;
  }
  return true;
}

PolySystem random_system(std::uint64_t q, const RandomSystemShape& shape, std::mt19937_64& rng) {
  auto draw = [&rng](std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; };
  const std::size_t vars = 1 + draw(shape.max_vars);
  const std::size_t npolys = 1 + draw(shape.max_polys);
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < npolys; ++i) {
    Polynomial poly;
    const std::size_t nterms = 1 + draw(shape.max_terms);
    for (std::size_t t = 0; t < nterms; ++t) {
      Exponents e(vars, 0);
      const auto deg = draw(shape.max_degree + 1);
      for (std::uint64_t u = 0; u < deg; ++u) ++e[draw(vars)];
      poly.terms.push_back({e, FieldElement{1 + draw(q - 1)}});
    }
    polys.push_back(std::move(poly));
  }
  return PolySystem(q, vars, std::move(polys));
}

}  // namespace gk::geom

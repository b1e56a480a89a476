// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matstab/matroid.h"

#include <numeric>
#include <string>

namespace matstab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // False if u and v were already connected.
  bool unite(std::uint32_t u, std::uint32_t v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent_[u] = v;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void validate_partition(const PartitionSpec& spec, const ElementSet& ground) {
  ElementSet covered(ground.universe());
  for (const auto& block : spec.blocks) {
    if (block.members.universe() != ground.universe()) {
      throw DomainError("partition block over a different universe");
    }
    if (!block.members.is_subset_of(ground)) {
      throw DomainError("partition block contains elements off the ground set");
    }
    if (block.members.intersects(covered)) {
      throw DomainError("partition blocks are not pairwise disjoint");
    }
    covered |= block.members;
  }
  if (covered != ground) {
    throw DomainError("partition blocks do not cover the ground set");
  }
}

void validate_graphic(const GraphicSpec& spec, const ElementSet& ground) {
  for (Element e : ground) {
    if (e.index >= spec.edges.size() || !spec.edges[e.index]) {
      throw DomainError("graphic matroid has no edge for element index " +
                        std::to_string(e.index));
    }
    auto [u, v] = *spec.edges[e.index];
    if (u >= spec.vertices.size() || v >= spec.vertices.size()) {
      throw DomainError("graphic edge endpoint out of range");
    }
  }
}

using Family = std::unordered_set<ElementSet, ElementSetHash>;

// Checks (I1) and (I2) exhaustively. With (I1) in place it suffices to check
// exchange for pairs whose sizes differ by exactly one.
std::shared_ptr<const Family> validate_explicit(const ExplicitSpec& spec,
                                                const ElementSet& ground) {
  auto family = std::make_shared<Family>();
  for (const auto& s : spec.independent) {
    if (s.universe() != ground.universe() || !s.is_subset_of(ground)) {
      throw DomainError("explicit independent set off the ground set");
    }
    family->insert(s);
  }
  if (!family->contains(ElementSet(ground.universe()))) {
    throw DomainError("explicit family does not contain the empty set");
  }
  for (const auto& s : *family) {
    for (Element e : s) {
      if (!family->contains(s.without(e))) {
        throw DomainError("explicit family is not downward closed (I1)");
      }
    }
  }
  std::vector<const ElementSet*> members;
  for (const auto& s : *family) members.push_back(&s);
  for (const ElementSet* small : members) {
    for (const ElementSet* large : members) {
      if (large->size() != small->size() + 1) continue;
      bool exchanged = false;
      for (Element u : *large - *small) {
        if (family->contains(small->with(u))) {
          exchanged = true;
          break;
        }
      }
      if (!exchanged) {
        throw DomainError("explicit family violates the exchange axiom (I2)");
      }
    }
  }
  return family;
}

}  // namespace

Matroid Matroid::make(MatroidSpec spec, ElementSet ground) {
  Leaf leaf;
  std::visit(Overloaded{
                 [](const UniformSpec&) {},
                 [](const FreeSpec&) {},
                 [&](const PartitionSpec& p) { validate_partition(p, ground); },
                 [&](const GraphicSpec& g) { validate_graphic(g, ground); },
                 [&](const ExplicitSpec& x) {
                   leaf.family = validate_explicit(x, ground);
                 },
             },
             spec);
  leaf.spec = std::make_shared<const MatroidSpec>(std::move(spec));
  leaf.spec_ground = ground;
  leaf.contracted = ElementSet(ground.universe());
  leaf.contraction_base = ElementSet(ground.universe());
  return Matroid(std::move(ground), std::move(leaf));
}

Matroid Matroid::empty(std::size_t universe) {
  return make(FreeSpec{}, ElementSet(universe));
}

void Matroid::check_subset(const ElementSet& x, const char* what) const {
  if (x.universe() != ground_.universe() || !x.is_subset_of(ground_)) {
    throw DomainError(std::string(what) +
                      ": set is not contained in the ground set");
  }
}

bool Matroid::leaf_independent(const Leaf& leaf, const ElementSet& x) const {
  if (leaf.counter) leaf.counter->record();
  ElementSet probe = x | leaf.contraction_base;
  return std::visit(
      Overloaded{
          [&](const UniformSpec& u) { return probe.size() <= u.rank; },
          [](const FreeSpec&) { return true; },
          [&](const PartitionSpec& p) {
            for (const auto& block : p.blocks) {
              if ((probe & block.members).size() > block.capacity) {
                return false;
              }
            }
            return true;
          },
          [&](const GraphicSpec& g) {
            UnionFind uf(g.vertices.size());
            for (Element e : probe) {
              auto [u, v] = *g.edges[e.index];
              if (!uf.unite(u, v)) return false;
            }
            return true;
          },
          [&](const ExplicitSpec&) { return leaf.family->contains(probe); },
      },
      *leaf.spec);
}

bool Matroid::is_independent(const ElementSet& x) const {
  check_subset(x, "is_independent");
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    return leaf_independent(*leaf, x);
  }
  for (const auto& part : *std::get<Sum>(node_)) {
    if (!part.is_independent(x & part.ground())) return false;
  }
  return true;
}

Matroid Matroid::restrict_to(const ElementSet& x) const {
  check_subset(x, "restrict");
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    return Matroid(x, *leaf);
  }
  auto parts = std::make_shared<std::vector<Matroid>>();
  for (const auto& part : *std::get<Sum>(node_)) {
    parts->push_back(part.restrict_to(x & part.ground()));
  }
  return Matroid(x, Sum(std::move(parts)));
}

Matroid Matroid::contract(const ElementSet& x) const {
  check_subset(x, "contract");
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    Leaf next = *leaf;
    next.contracted |= x;
    next.contraction_base |= greedy_base(*this, x);
    return Matroid(ground_ - x, std::move(next));
  }
  auto parts = std::make_shared<std::vector<Matroid>>();
  for (const auto& part : *std::get<Sum>(node_)) {
    parts->push_back(part.contract(x & part.ground()));
  }
  return Matroid(ground_ - x, Sum(std::move(parts)));
}

Matroid Matroid::contract_with_base(const ElementSet& x,
                                    const ElementSet& base) const {
  check_subset(x, "contract");
  if (base.universe() != x.universe() || !base.is_subset_of(x)) {
    throw ContractError(
        "contraction base is not a subset of the contracted set");
  }
  if (!is_independent(base)) {
    throw ContractError("contraction base is dependent");
  }
  for (Element e : x - base) {
    if (is_independent(base.with(e))) {
      throw ContractError("contraction base does not span the contracted set");
    }
  }
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    Leaf next = *leaf;
    next.contracted |= x;
    next.contraction_base |= base;
    return Matroid(ground_ - x, std::move(next));
  }
  auto parts = std::make_shared<std::vector<Matroid>>();
  for (const auto& part : *std::get<Sum>(node_)) {
    parts->push_back(
        part.contract_with_base(x & part.ground(), base & part.ground()));
  }
  return Matroid(ground_ - x, Sum(std::move(parts)));
}

Matroid Matroid::direct_sum(std::span<const Matroid> parts) {
  if (parts.empty()) {
    throw DomainError(
        "direct sum of no summands has no universe; use Matroid::empty");
  }
  ElementSet ground(parts.front().universe());
  for (const auto& part : parts) {
    if (part.universe() != ground.universe()) {
      throw DomainError("direct sum summands over different universes");
    }
    if (part.ground().intersects(ground)) {
      throw DomainError("direct sum summands have overlapping ground sets");
    }
    ground |= part.ground();
  }
  return Matroid(std::move(ground),
                 Sum(std::make_shared<const std::vector<Matroid>>(
                     parts.begin(), parts.end())));
}

Matroid Matroid::instrumented(std::shared_ptr<OracleCounter> counter) const {
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    Leaf next = *leaf;
    next.counter = std::move(counter);
    return Matroid(ground_, std::move(next));
  }
  auto parts = std::make_shared<std::vector<Matroid>>();
  for (const auto& part : *std::get<Sum>(node_)) {
    parts->push_back(part.instrumented(counter));
  }
  return Matroid(ground_, Sum(std::move(parts)));
}

const MatroidSpec* Matroid::spec() const {
  const auto* leaf = std::get_if<Leaf>(&node_);
  if (leaf == nullptr || !leaf->contracted.empty() ||
      leaf->spec_ground != ground_) {
    return nullptr;
  }
  return leaf->spec.get();
}

ElementSet Matroid::contracted() const {
  if (const auto* leaf = std::get_if<Leaf>(&node_)) return leaf->contracted;
  return ElementSet(universe());
}

ElementSet Matroid::contraction_base() const {
  if (const auto* leaf = std::get_if<Leaf>(&node_)) {
    return leaf->contraction_base;
  }
  return ElementSet(universe());
}

bool Matroid::is_direct_sum() const {
  return std::holds_alternative<Sum>(node_);
}

std::span<const Matroid> Matroid::summands() const {
  if (const auto* sum = std::get_if<Sum>(&node_)) return **sum;
  return {};
}

ElementSet greedy_base(const Matroid& m, const ElementSet& x) {
  if (!x.is_subset_of(m.ground())) {
    throw DomainError("greedy_base: set is not contained in the ground set");
  }
  ElementSet base(m.universe());
  for (Element e : x) {
    ElementSet next = base.with(e);
    if (m.is_independent(next)) base = std::move(next);
  }
  return base;
}

std::size_t rank(const Matroid& m, const ElementSet& x) {
  return greedy_base(m, x).size();
}

std::size_t rank(const Matroid& m) { return rank(m, m.ground()); }

ElementSet closure(const Matroid& m, const ElementSet& x) {
  ElementSet base = greedy_base(m, x);
  ElementSet out = x;
  for (Element u : m.ground() - x) {
    if (!m.is_independent(base.with(u))) out.insert(u);
  }
  return out;
}

ElementSet fundamental_circuit(const Matroid& m, Element u,
                               const ElementSet& independent) {
  if (!m.ground().contains(u)) {
    throw DomainError("fundamental_circuit: element outside the ground set");
  }
  if (!m.is_independent(independent)) {
    throw ContractError("fundamental_circuit: I is not independent");
  }
  if (independent.contains(u)) {
    throw ContractError("fundamental_circuit: u already belongs to I");
  }
  ElementSet extended = independent.with(u);
  if (m.is_independent(extended)) {
    throw ContractError("fundamental_circuit: u is not in the closure of I");
  }
  ElementSet circuit = ElementSet(m.universe()).with(u);
  for (Element v : independent) {
    if (m.is_independent(extended.without(v))) circuit.insert(v);
  }
  return circuit;
}

std::optional<ElementSet> find_circuit_within(const Matroid& m,
                                              const ElementSet& x) {
  if (m.is_independent(x)) return std::nullopt;
  ElementSet circuit = x;
  for (Element e : x) {
    ElementSet smaller = circuit.without(e);
    if (!m.is_independent(smaller)) circuit = std::move(smaller);
  }
  return circuit;
}

}  // namespace matstab

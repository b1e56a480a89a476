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

// Matroids given by independence oracles, and the minor / direct-sum views
// built on top of them.
//
// A Matroid value is an immutable view. Base matroids come from one of the
// concrete families in MatroidSpec. Restriction shrinks the ground set,
// contraction by X fixes a greedy base B of M|X and tests I as I + B in the
// parent, and direct sums test every summand on its trace. Nested minors
// are flattened: a contracted view keeps the union of all contraction bases,
// so each independence query costs exactly one base-oracle call per summand.

#ifndef MATSTAB_MATROID_H_
#define MATSTAB_MATROID_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "matstab/element_set.h"

namespace matstab {

struct UniformSpec {
  std::size_t rank = 0;
};

struct PartitionSpec {
  struct Block {
    ElementSet members;
    std::size_t capacity = 0;
  };
  std::vector<Block> blocks;
};

struct GraphicSpec {
  std::vector<std::string> vertices;
  // Indexed by element; endpoints are indices into `vertices`. Elements off
  // the ground set have no entry.
  std::vector<std::optional<std::pair<std::uint32_t, std::uint32_t>>> edges;
};

struct ExplicitSpec {
  std::vector<ElementSet> independent;
};

struct FreeSpec {};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec,
                                 ExplicitSpec, FreeSpec>;

// Counts base-oracle queries made through every view derived from a matroid
// the counter was attached to.
class OracleCounter {
 public:
  void record() { calls_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset() { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> calls_{0};
};

class Matroid {
 public:
  // Validates `spec` against `ground` and throws DomainError if it is
  // malformed: overlapping or non-covering partition blocks, graphic edges
  // missing for ground elements, or an explicit family that is not a
  // matroid.
  static Matroid make(MatroidSpec spec, ElementSet ground);
  // The matroid (empty, {empty}) over a universe of the given size.
  static Matroid empty(std::size_t universe);

  const ElementSet& ground() const { return ground_; }
  std::size_t universe() const { return ground_.universe(); }

  // Throws DomainError if `x` is not a subset of the ground set.
  bool is_independent(const ElementSet& x) const;

  Matroid restrict_to(const ElementSet& x) const;
  Matroid contract(const ElementSet& x) const;
  // Contraction with a caller-chosen base of M|x; throws ContractError
  // unless `base` is a base of the restriction to x.
  Matroid contract_with_base(const ElementSet& x, const ElementSet& base) const;
  // Throws DomainError when summand ground sets overlap or universes differ.
  static Matroid direct_sum(std::span<const Matroid> parts);

  // Copy of this view whose base-oracle queries are recorded in `counter`.
  Matroid instrumented(std::shared_ptr<OracleCounter> counter) const;

  // The underlying spec when this view is an unmodified base matroid.
  const MatroidSpec* spec() const;
  // Union of all elements contracted away along the way to this view.
  // Empty for direct sums.
  ElementSet contracted() const;
  ElementSet contraction_base() const;
  bool is_direct_sum() const;
  std::span<const Matroid> summands() const;

 private:
  struct Leaf {
    std::shared_ptr<const MatroidSpec> spec;
    std::shared_ptr<const std::unordered_set<ElementSet, ElementSetHash>>
        family;  // Explicit only
    ElementSet spec_ground;
    ElementSet contracted;
    ElementSet contraction_base;
    std::shared_ptr<OracleCounter> counter;
  };
  using Sum = std::shared_ptr<const std::vector<Matroid>>;

  Matroid(ElementSet ground, std::variant<Leaf, Sum> node)
      : ground_(std::move(ground)), node_(std::move(node)) {}

  bool leaf_independent(const Leaf& leaf, const ElementSet& x) const;
  void check_subset(const ElementSet& x, const char* what) const;

  ElementSet ground_;
  std::variant<Leaf, Sum> node_;
};

inline bool is_independent(const Matroid& m, const ElementSet& x) {
  return m.is_independent(x);
}

// Maximal independent subset of x, built greedily in canonical order.
ElementSet greedy_base(const Matroid& m, const ElementSet& x);
std::size_t rank(const Matroid& m, const ElementSet& x);
std::size_t rank(const Matroid& m);
ElementSet closure(const Matroid& m, const ElementSet& x);

// The unique circuit inside I + u, as {v in I + u : I + u - v independent}.
// Throws ContractError if I is dependent, u is in I, or u is outside cl(I).
ElementSet fundamental_circuit(const Matroid& m, Element u,
                               const ElementSet& independent);

// A circuit inside x obtained by dropping elements in canonical order while
// the remainder stays dependent; nullopt if x is independent.
std::optional<ElementSet> find_circuit_within(const Matroid& m,
                                              const ElementSet& x);

inline Matroid restrict_to(const Matroid& m, const ElementSet& x) {
  return m.restrict_to(x);
}
inline Matroid contract(const Matroid& m, const ElementSet& x) {
  return m.contract(x);
}
inline Matroid direct_sum(std::span<const Matroid> parts) {
  return Matroid::direct_sum(parts);
}

}  // namespace matstab

#endif  // MATSTAB_MATROID_H_
